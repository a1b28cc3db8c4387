#pragma once

// The mod p Satake parameter space for a fixed central character zeta: one
// component per Weyl orbit gamma whose restriction to the center is zeta|.
// Regular orbits give two crossed lines {xy = 0}; non-regular ones give a line.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "lzeta/chars.hpp"

namespace lzeta {

enum class ComponentShape { CrossedLines, Line };

struct SatakeComponent {
  OrbitGamma gamma;
  ComponentShape shape = ComponentShape::Line;
  TorusChar first;  // coordinates (x, y) refer to the ordered pair (first, swapped(first))
  FieldElement z2;
};

struct SatakeSpace {
  FieldPtr field;
  CentralChar zeta;
  std::vector<SatakeComponent> components;

  int q() const { return static_cast<int>(field->p()); }
  std::optional<std::size_t> find(const OrbitGamma& gamma) const;
};

struct CrossedCoords {
  FieldElement x, y;
  friend auto operator<=>(const CrossedCoords&, const CrossedCoords&) = default;
};

struct LineCoord {
  FieldElement z1;
  friend auto operator<=>(const LineCoord&, const LineCoord&) = default;
};

struct SatakePoint {
  std::size_t component = 0;
  std::variant<CrossedCoords, LineCoord> coords;

  bool is_origin() const;
  friend bool operator==(const SatakePoint&, const SatakePoint&) = default;
  friend auto operator<=>(const SatakePoint&, const SatakePoint&) = default;
};

// The action of a smooth character eta: r = exponent of omega, z0 = eta(p^{-1}).
struct Twist {
  int r = 0;
  FieldElement z0;
};

Twist twist_of(const SmoothChar& eta);
CentralChar twisted_central_char(const CentralChar& zeta, const Twist& t);

SatakeSpace build_space(FieldPtr field, const CentralChar& zeta);
std::vector<SatakePoint> enumerate_points(const SatakeSpace& space);

// Point with coordinates (x, y) relative to the ordering (chi, chi^s); chi must
// belong to a regular component of the space.
SatakePoint crossed_point(const SatakeSpace& space, const TorusChar& chi, const FieldElement& x,
                          const FieldElement& y);
SatakePoint line_point(const SatakeSpace& space, const OrbitGamma& gamma, const FieldElement& z1);

// dst must be the space for twisted_central_char(src.zeta, t) over the same field.
SatakePoint twist_point(const SatakeSpace& src, const SatakePoint& v, const Twist& t, const SatakeSpace& dst);
CentralChar theta(const SatakeSpace& space, const SatakePoint& v);

SatakeSpace lift(const SatakeSpace& space, const Embedding& e);
SatakePoint lift(const SatakePoint& v, const Embedding& e);

}  // namespace lzeta
