#pragma once

// The morphism L_zeta from the Satake parameter space to the Emerton-Gee curve.
// On the basic spaces each line of each component maps either isomorphically
// onto a chart of a curve component or, in the odd case, by t = s + 1/s onto an
// exterior component. Non-basic zeta go through the twist to the basic space.

#include <optional>
#include <string>
#include <vector>

#include "lzeta/egcurve.hpp"
#include "lzeta/satake.hpp"

namespace lzeta {

enum class PieceKind { OpenImmersion, QuadraticCover };
enum class SourceLine { X, Y, Z1 };

const char* to_string(PieceKind kind);
const char* to_string(SourceLine line);

struct MapPiece {
  SourceLine line = SourceLine::X;
  PieceKind kind = PieceKind::OpenImmersion;
  std::size_t target_component = 0;
  // Open immersions: the left-node coordinate of the target is s (or 1/s when
  // inverted), so the origin lands on that chart's centre. Quadratic covers: t = s + 1/s.
  bool inverted = false;
  std::size_t centre_node = 0;

  const char* formula() const { return kind == PieceKind::OpenImmersion ? "identity-chart" : "y-plus-inverse"; }
};

struct ComponentMapDesc {
  std::size_t source = 0;  // component of the basic space
  std::size_t origin_node = 0;
  std::vector<MapPiece> pieces;
};

struct Lmap {
  FieldPtr field;
  SatakeSpace space;
  SatakeSpace basic_space;
  EGCurve curve;
  SmoothChar to_basic;
  std::vector<ComponentMapDesc> pieces;  // indexed by basic_space component
};

// Throws ParityMismatch when space and curve disagree on the central character.
Lmap build_map(const SatakeSpace& space, const EGCurve& curve);
Lmap lift(const Lmap& map, const Embedding& e);

EGPoint eval(const SatakePoint& v, const Lmap& map);

struct FiberResult {
  FieldPtr field;
  SatakeSpace space;  // the source space over `field`
  std::vector<SatakePoint> points;
  bool ramified = false;
  bool extension = false;  // points live in the quadratic extension
};

FiberResult fiber(const EGPoint& x, const Lmap& map);

struct GeometryReport {
  bool pass = true;
  std::size_t open_immersions = 0;
  std::size_t quadratic_covers = 0;
  std::size_t points_checked = 0;
  std::vector<std::string> failures;
};

GeometryReport verify_geometry(const Lmap& map);

}  // namespace lzeta
