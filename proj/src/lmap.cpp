#include "lzeta/lmap.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lzeta/error.hpp"

namespace lzeta {

const char* to_string(PieceKind kind) {
  return kind == PieceKind::OpenImmersion ? "open-immersion" : "quadratic-cover";
}

const char* to_string(SourceLine line) {
  switch (line) {
    case SourceLine::X:
      return "x";
    case SourceLine::Y:
      return "y";
    case SourceLine::Z1:
      return "z1";
  }
  return "?";
}

namespace {

std::vector<ComponentMapDesc> basic_pieces(const SatakeSpace& space, const EGCurve& curve) {
  const int p = curve.p();
  const int half = (p - 1) / 2;
  const std::size_t last = curve.components.size() - 1;
  std::vector<ComponentMapDesc> out;
  for (std::size_t i = 0; i < space.components.size(); ++i) {
    const SatakeComponent& sc = space.components[i];
    ComponentMapDesc d;
    d.source = i;
    auto open = [&](SourceLine line, std::size_t target, bool inverted, std::size_t centre) {
      d.pieces.push_back({line, PieceKind::OpenImmersion, target, inverted, centre});
    };
    auto cover = [&](SourceLine line, std::size_t target, std::size_t centre) {
      d.pieces.push_back({line, PieceKind::QuadraticCover, target, false, centre});
    };
    if (curve.parity == Parity::Even) {
      const int k = sc.first.a;
      d.origin_node = static_cast<std::size_t>(k);
      if (!sc.gamma.regular) {
        if (k == 0)
          open(SourceLine::Z1, 0, false, 0);
        else
          open(SourceLine::Z1, last, true, static_cast<std::size_t>(half));
      } else {
        open(SourceLine::X, static_cast<std::size_t>(k), false, d.origin_node);
        open(SourceLine::Y, static_cast<std::size_t>(k - 1), true, d.origin_node);
      }
    } else {
      const int k = sc.first.a + 1;
      d.origin_node = static_cast<std::size_t>(k - 1);
      if (k == half)
        cover(SourceLine::X, last, d.origin_node);
      else
        open(SourceLine::X, static_cast<std::size_t>(k), false, d.origin_node);
      if (k == 1)
        cover(SourceLine::Y, 0, d.origin_node);
      else
        open(SourceLine::Y, static_cast<std::size_t>(k - 1), true, d.origin_node);
    }
    out.push_back(std::move(d));
  }
  return out;
}

SatakePoint on_line(std::size_t comp, SourceLine line, const FieldElement& s) {
  const FieldElement zero = s.field()->zero();
  switch (line) {
    case SourceLine::X:
      return {comp, CrossedCoords{s, zero}};
    case SourceLine::Y:
      return {comp, CrossedCoords{zero, s}};
    case SourceLine::Z1:
      break;
  }
  return {comp, LineCoord{s}};
}

SatakePoint origin_of(const SatakeSpace& space, std::size_t comp) {
  const FieldElement zero = space.field->zero();
  if (space.components.at(comp).shape == ComponentShape::CrossedLines) return {comp, CrossedCoords{zero, zero}};
  return {comp, LineCoord{zero}};
}

EGPoint apply_piece(const MapPiece& piece, const FieldElement& s, const EGCurve& curve) {
  if (piece.kind == PieceKind::QuadraticCover) return red_point(curve, piece.target_component, s + s.inv());
  const EGComponent& comp = curve.components[piece.target_component];
  const FieldElement x = piece.inverted ? s.inv() : s;
  return red_point(curve, piece.target_component, comp.value_inverted ? x.inv() : x);
}

EGPoint eval_basic(const SatakePoint& w, const Lmap& map) {
  const ComponentMapDesc& d = map.pieces.at(w.component);
  if (w.is_origin()) return node_point(map.curve, d.origin_node);
  SourceLine line = SourceLine::Z1;
  FieldElement s;
  if (auto* c = std::get_if<CrossedCoords>(&w.coords)) {
    line = c->x.is_zero() ? SourceLine::Y : SourceLine::X;
    s = c->x.is_zero() ? c->y : c->x;
  } else {
    s = std::get<LineCoord>(w.coords).z1;
  }
  for (const auto& piece : d.pieces)
    if (piece.line == line) return apply_piece(piece, s, map.curve);
  fail(ErrorKind::InvalidArgument, "no map piece for this line");
}

// Preimages in the basic space; nullopt when a quadratic cover needs the extension.
std::optional<std::pair<std::vector<SatakePoint>, bool>> fiber_basic(const EGPoint& x, const Lmap& map) {
  std::vector<SatakePoint> pts;
  bool ramified = false;
  if (auto* n = std::get_if<NodePoint>(&x.where)) {
    for (const auto& d : map.pieces)
      if (d.origin_node == n->node) pts.push_back(origin_of(map.basic_space, d.source));
    return std::make_pair(pts, false);
  }
  const auto& red = std::get<RedPoint>(x.where);
  const EGComponent& comp = map.curve.components.at(red.component);
  const Field& k = *map.field;
  for (const auto& d : map.pieces) {
    for (const auto& piece : d.pieces) {
      if (piece.target_component != red.component) continue;
      if (piece.kind == PieceKind::OpenImmersion) {
        const FieldElement xl = comp.value_inverted ? red.value.inv() : red.value;
        pts.push_back(on_line(d.source, piece.line, piece.inverted ? xl.inv() : xl));
        continue;
      }
      const QuadraticRoots roots = k.solve_quadratic(-red.value, k.one());
      if (roots.roots.empty()) return std::nullopt;
      ramified = ramified || roots.double_root;
      for (const auto& s : roots.roots) pts.push_back(on_line(d.source, piece.line, s));
    }
  }
  std::sort(pts.begin(), pts.end());
  return std::make_pair(pts, ramified);
}

}  // namespace

Lmap build_map(const SatakeSpace& space, const EGCurve& curve) {
  if (space.field.get() != curve.field.get()) fail(ErrorKind::InvalidArgument, "space and curve use different fields");
  if (parity_of(space.zeta) != curve.parity)
    fail(ErrorKind::ParityMismatch, "space and curve have central characters of different parity");
  if (space.zeta != curve.zeta) fail(ErrorKind::InvalidArgument, "space and curve have different central characters");
  Lmap map;
  map.field = space.field;
  map.space = space;
  map.curve = curve;
  map.to_basic = curve.to_basic;
  map.basic_space = build_space(space.field, basic_central_char(*space.field, curve.parity));
  map.pieces = basic_pieces(map.basic_space, curve);
  return map;
}

Lmap lift(const Lmap& map, const Embedding& e) {
  Lmap out = map;
  out.field = e.to();
  out.space = lift(map.space, e);
  out.basic_space = lift(map.basic_space, e);
  out.curve = lift(map.curve, e);
  out.to_basic = lift(map.to_basic, e);
  return out;
}

EGPoint eval(const SatakePoint& v, const Lmap& map) {
  const SatakePoint w = twist_point(map.space, v, twist_of(map.to_basic), map.basic_space);
  return eval_basic(w, map);
}

FiberResult fiber(const EGPoint& x, const Lmap& map) {
  if (auto r = fiber_basic(x, map)) {
    FiberResult out{map.field, map.space, {}, r->second, false};
    const Twist back = twist_of(inverse(map.to_basic));
    for (const auto& w : r->first) out.points.push_back(twist_point(map.basic_space, w, back, map.space));
    std::sort(out.points.begin(), out.points.end());
    return out;
  }
  const Embedding& e = map.field->quadratic_extension().embedding;
  FiberResult out = fiber(lift(x, e), lift(map, e));
  out.extension = true;
  return out;
}

GeometryReport verify_geometry(const Lmap& map) {
  GeometryReport rep;
  auto failure = [&](std::string msg) {
    rep.pass = false;
    rep.failures.push_back(std::move(msg));
  };
  const Field& k = *map.field;
  const auto units = k.units();
  const EGCurve& curve = map.curve;

  // Each piece on its own, over the base field.
  for (const auto& d : map.pieces) {
    const EGPoint centre = eval_basic(origin_of(map.basic_space, d.source), map);
    for (const auto& piece : d.pieces) {
      if (centre != node_point(curve, piece.centre_node)) failure("origin does not land on the chart centre");
      std::map<EGPoint, std::size_t> hits;
      for (const auto& s : units) {
        const EGPoint img = eval_basic(on_line(d.source, piece.line, s), map);
        const auto* red = std::get_if<RedPoint>(&img.where);
        if (!red || red->component != piece.target_component)
          failure("piece image leaves its target component");
        ++hits[img];
      }
      if (piece.kind == PieceKind::OpenImmersion) {
        ++rep.open_immersions;
        if (hits.size() != units.size()) failure("open immersion is not injective");
      } else {
        ++rep.quadratic_covers;
        std::set<FieldElement> branch;
        for (const auto& [img, n] : hits) {
          if (n > 2) failure("quadratic cover has a fiber of size > 2");
          if (n == 1) branch.insert(std::get<RedPoint>(img.where).value);
        }
        const std::set<FieldElement> expected{k.element(2), k.element(-2)};
        if (branch != expected) failure("branch locus of a quadratic cover is not {t = 2, t = -2}");
        for (const auto& t : k.elements()) {
          const bool disc_zero = (t * t - k.element(4)).is_zero();
          if (disc_zero != expected.contains(t)) failure("discriminant t^2 - 4 disagrees with the branch locus");
        }
      }
    }
  }
  if (curve.parity == Parity::Odd && rep.quadratic_covers != 2) failure("odd map must have exactly two quadratic covers");
  if (curve.parity == Parity::Even && rep.quadratic_covers != 0) failure("even map must consist of open immersions");

  // Surjectivity onto X(k) from points over the quadratic extension, and fiber sizes.
  const QuadraticExtension& ext = k.quadratic_extension();
  const Lmap big = lift(map, ext.embedding);
  std::map<EGPoint, std::size_t> counts;
  for (const auto& v : enumerate_points(big.space)) ++counts[eval(v, big)];
  for (const auto& [img, n] : counts)
    if (n > 2) failure("fiber of size > 2 over the quadratic extension");
  for (const auto& x : enumerate_points(curve)) {
    ++rep.points_checked;
    const EGPoint xb = lift(x, ext.embedding);
    const auto it = counts.find(xb);
    if (it == counts.end()) {
      failure("point with empty fiber over the quadratic extension");
      continue;
    }
    const FiberResult f = fiber(x, map);
    if (f.points.size() != it->second) failure("analytic fiber disagrees with exhaustive preimages");
    std::vector<SatakePoint> lifted;
    for (const auto& v : f.points) lifted.push_back(f.extension ? v : lift(v, ext.embedding));
    for (const auto& v : lifted)
      if (eval(v, big) != xb) failure("fiber point does not map to the point");
  }
  return rep;
}

}  // namespace lzeta
