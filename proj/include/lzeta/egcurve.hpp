#pragma once

// The reduced Emerton-Gee stack X_zeta for GL_2(Q_p), as a chain of projective
// lines. Points are either irreducible nodes or reducible points given by a
// chart value on a component.
//
// Curves for non-basic zeta reuse the basic layout: a point P of X_zeta stands
// for rep_basic(P) (x) to_basic^{-1}, where zeta * to_basic^2 is basic.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lzeta/chars.hpp"

namespace lzeta {

// Sym^r (x) det^a; r = -1 marks the formal weight "Sym^{-1}" used in labels.
struct SerreWeight {
  int r = 0;
  int a = 0;
  bool formal() const { return r < 0; }
  friend auto operator<=>(const SerreWeight&, const SerreWeight&) = default;
};

std::string to_string(const SerreWeight& w);

enum class ChartKind { Z1, Trace, Interior };

const char* chart_name(ChartKind kind);

struct EGComponent {
  std::size_t index = 0;
  SerreWeight left, right;
  ChartKind chart = ChartKind::Interior;
  std::optional<std::size_t> left_node, right_node;
  // Reducible points are {unr(x) w^omega_x, unr(1/x) w^omega_inv} where x is
  // the coordinate vanishing at left_node (for Trace charts, a root of
  // y^2 - t y + 1).
  int omega_x = 0;
  int omega_inv = 0;
  bool value_inverted = false;  // stored value is 1/x
  bool exterior() const { return chart != ChartKind::Interior; }
};

struct IrredNode {
  std::size_t index = 0;
  int r = 0;  // the node is ind(omega_2^{r+1}) (x) omega^a
  int a = 0;
  bool smooth = false;
  std::optional<std::size_t> left_component, right_component;
};

struct NodePoint {
  std::size_t node = 0;
  friend auto operator<=>(const NodePoint&, const NodePoint&) = default;
};

struct RedPoint {
  std::size_t component = 0;
  FieldElement value;
  friend auto operator<=>(const RedPoint&, const RedPoint&) = default;
};

struct EGPoint {
  std::variant<NodePoint, RedPoint> where;
  bool exceptional = false;
  bool is_node() const { return std::holds_alternative<NodePoint>(where); }
  friend bool operator==(const EGPoint&, const EGPoint&) = default;
  friend auto operator<=>(const EGPoint&, const EGPoint&) = default;
};

struct EGCurve {
  FieldPtr field;
  Parity parity = Parity::Even;
  CentralChar zeta;
  SmoothChar to_basic;
  std::vector<EGComponent> components;
  std::vector<IrredNode> nodes;

  int p() const { return static_cast<int>(field->p()); }
};

struct ReducibleRep {
  SmoothChar first, second;  // sorted
  friend auto operator<=>(const ReducibleRep&, const ReducibleRep&) = default;
};

// ind(omega_2^{r+1}) (x) eta, kept in a normal form for its isomorphism class.
struct IrreducibleRep {
  int r = 0;
  SmoothChar eta;
  friend auto operator<=>(const IrreducibleRep&, const IrreducibleRep&) = default;
};

using GaloisRepDesc = std::variant<ReducibleRep, IrreducibleRep>;

GaloisRepDesc make_reducible(const SmoothChar& a, const SmoothChar& b);
GaloisRepDesc make_irreducible(int r, const SmoothChar& eta);
GaloisRepDesc twist_rep(const GaloisRepDesc& rho, const SmoothChar& eta);
SmoothChar determinant(const GaloisRepDesc& rho);
std::pair<SerreWeight, SerreWeight> serre_weights(const IrreducibleRep& rho);
const Field& field_of(const GaloisRepDesc& rho);
GaloisRepDesc lift(const GaloisRepDesc& rho, const Embedding& e);

EGCurve build_curve(FieldPtr field, Parity parity);
// Throws NeedsExtension when the twist to the basic curve is not defined over field.
EGCurve build_curve(FieldPtr field, const CentralChar& zeta);
EGCurve lift(const EGCurve& curve, const Embedding& e);

std::pair<SerreWeight, SerreWeight> node_weights(const EGCurve& curve, std::size_t node);
std::vector<EGPoint> enumerate_points(const EGCurve& curve);
EGPoint node_point(const EGCurve& curve, std::size_t node);
EGPoint red_point(const EGCurve& curve, std::size_t component, const FieldElement& value);
std::vector<EGPoint> exceptional_points(const EGCurve& curve);
EGPoint lift(const EGPoint& pt, const Embedding& e);

struct RepOfPoint {
  GaloisRepDesc rep;
  FieldPtr field;
  bool extension = false;
};

RepOfPoint rep_of_point(const EGPoint& pt, const EGCurve& curve);
// Inverse of rep_of_point. rho may live over curve.field or its quadratic extension.
EGPoint point_of_rep(const GaloisRepDesc& rho, const EGCurve& curve);
EGPoint twist_curve(const EGPoint& pt, const SmoothChar& eta, const EGCurve& src, const EGCurve& dst);

}  // namespace lzeta
