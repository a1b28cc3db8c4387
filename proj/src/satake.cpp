#include "lzeta/satake.hpp"

#include <algorithm>

#include "lzeta/error.hpp"

namespace lzeta {

std::optional<std::size_t> SatakeSpace::find(const OrbitGamma& gamma) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].gamma == gamma) return i;
  return std::nullopt;
}

bool SatakePoint::is_origin() const {
  if (auto* c = std::get_if<CrossedCoords>(&coords)) return c->x.is_zero() && c->y.is_zero();
  return std::get<LineCoord>(coords).z1.is_zero();
}

Twist twist_of(const SmoothChar& eta) { return {eta.c, eta.v}; }

CentralChar twisted_central_char(const CentralChar& zeta, const Twist& t) {
  return smooth_char(static_cast<long long>(zeta.c) + 2LL * t.r, zeta.v * t.z0 * t.z0);
}

SatakeSpace build_space(FieldPtr field, const CentralChar& zeta) {
  const int q = static_cast<int>(field->p());
  // Orderings of regular components are transported from the basic space,
  // where the first character of each pair is the orbit representative.
  const int r0 = mod(-static_cast<long long>(basic_twist(zeta).eta.c), q - 1);
  SatakeSpace space{field, zeta, {}};
  auto fib = fiber_of_restriction(q, zeta.c);
  std::stable_partition(fib.begin(), fib.end(), [](const OrbitGamma& g) { return !g.regular; });
  for (const auto& g : fib) {
    SatakeComponent comp;
    comp.gamma = g;
    comp.z2 = zeta.v;
    if (g.regular) {
      comp.shape = ComponentShape::CrossedLines;
      const OrbitGamma basic = twist_orbit(g, -r0, q);
      comp.first = twist_char(basic.rep, r0, q);
    } else {
      comp.shape = ComponentShape::Line;
      comp.first = g.rep;
    }
    space.components.push_back(comp);
  }
  return space;
}

std::vector<SatakePoint> enumerate_points(const SatakeSpace& space) {
  const auto units = space.field->units();
  const FieldElement zero = space.field->zero();
  std::vector<SatakePoint> out;
  for (std::size_t i = 0; i < space.components.size(); ++i) {
    if (space.components[i].shape == ComponentShape::Line) {
      out.push_back({i, LineCoord{zero}});
      for (const auto& u : units) out.push_back({i, LineCoord{u}});
    } else {
      out.push_back({i, CrossedCoords{zero, zero}});
      for (const auto& u : units) out.push_back({i, CrossedCoords{u, zero}});
      for (const auto& u : units) out.push_back({i, CrossedCoords{zero, u}});
    }
  }
  return out;
}

SatakePoint crossed_point(const SatakeSpace& space, const TorusChar& chi, const FieldElement& x,
                          const FieldElement& y) {
  const auto idx = space.find(orbit_of(chi, space.q()));
  if (!idx || space.components[*idx].shape != ComponentShape::CrossedLines)
    fail(ErrorKind::UnknownPoint, "no regular component for this character");
  if (!x.is_zero() && !y.is_zero()) fail(ErrorKind::InvalidArgument, "point is not on the crossed lines xy = 0");
  if (space.components[*idx].first == chi) return {*idx, CrossedCoords{x, y}};
  return {*idx, CrossedCoords{y, x}};
}

SatakePoint line_point(const SatakeSpace& space, const OrbitGamma& gamma, const FieldElement& z1) {
  const auto idx = space.find(gamma);
  if (!idx || space.components[*idx].shape != ComponentShape::Line)
    fail(ErrorKind::UnknownPoint, "no non-regular component for this orbit");
  return {*idx, LineCoord{z1}};
}

SatakePoint twist_point(const SatakeSpace& src, const SatakePoint& v, const Twist& t, const SatakeSpace& dst) {
  if (dst.zeta != twisted_central_char(src.zeta, t))
    fail(ErrorKind::InvalidArgument, "target space has the wrong central character");
  const SatakeComponent& comp = src.components.at(v.component);
  const int q = src.q();
  if (auto* c = std::get_if<CrossedCoords>(&v.coords))
    return crossed_point(dst, twist_char(comp.first, t.r, q), t.z0 * c->x, t.z0 * c->y);
  return line_point(dst, twist_orbit(comp.gamma, t.r, q), t.z0 * std::get<LineCoord>(v.coords).z1);
}

CentralChar theta(const SatakeSpace& space, const SatakePoint& v) {
  const SatakeComponent& comp = space.components.at(v.component);
  return smooth_char(restrict_to_center(comp.gamma, space.q()), comp.z2);
}

SatakeSpace lift(const SatakeSpace& space, const Embedding& e) {
  SatakeSpace out = space;
  out.field = e.to();
  out.zeta = lift(space.zeta, e);
  for (auto& c : out.components) c.z2 = e.up(c.z2);
  return out;
}

SatakePoint lift(const SatakePoint& v, const Embedding& e) {
  SatakePoint out = v;
  if (auto* c = std::get_if<CrossedCoords>(&out.coords)) {
    c->x = e.up(c->x);
    c->y = e.up(c->y);
  } else {
    auto& l = std::get<LineCoord>(out.coords);
    l.z1 = e.up(l.z1);
  }
  return out;
}

}  // namespace lzeta
