#include "lzeta/egcurve.hpp"

#include <algorithm>

#include "lzeta/error.hpp"

namespace lzeta {

std::string to_string(const SerreWeight& w) {
  std::string s = w.formal() ? "\"Sym^-1\"" : "Sym^" + std::to_string(w.r);
  if (w.a != 0) s += " det^" + std::to_string(w.a);
  return s;
}

const char* chart_name(ChartKind kind) {
  switch (kind) {
    case ChartKind::Z1:
      return "z1";
    case ChartKind::Trace:
      return "t";
    case ChartKind::Interior:
      return "x";
  }
  return "?";
}

// ---- Galois representations ---------------------------------------------

GaloisRepDesc make_reducible(const SmoothChar& a, const SmoothChar& b) {
  return b < a ? ReducibleRep{b, a} : ReducibleRep{a, b};
}

GaloisRepDesc make_irreducible(int r, const SmoothChar& eta) {
  const Field& k = *eta.v.field();
  const int p = static_cast<int>(k.p());
  if (r < 0 || r > p - 1) fail(ErrorKind::InvalidArgument, "irreducible parameter r out of range");
  // ind(w2^{r+1}) (x) eta = ind(w2^{p-r}) (x) eta w^r, and both absorb unr(-1).
  IrreducibleRep best{r, eta};
  const IrreducibleRep alt{p - 1 - r, eta * omega_power(k, r)};
  for (const auto& c : {IrreducibleRep{r, eta}, alt}) {
    best = std::min(best, c);
    best = std::min(best, IrreducibleRep{c.r, {c.eta.c, -c.eta.v}});
  }
  return best;
}

GaloisRepDesc twist_rep(const GaloisRepDesc& rho, const SmoothChar& eta) {
  if (auto* red = std::get_if<ReducibleRep>(&rho)) return make_reducible(red->first * eta, red->second * eta);
  const auto& irr = std::get<IrreducibleRep>(rho);
  return make_irreducible(irr.r, irr.eta * eta);
}

SmoothChar determinant(const GaloisRepDesc& rho) {
  if (auto* red = std::get_if<ReducibleRep>(&rho)) return red->first * red->second;
  const auto& irr = std::get<IrreducibleRep>(rho);
  return omega_power(*irr.eta.v.field(), irr.r + 1) * square(irr.eta);
}

std::pair<SerreWeight, SerreWeight> serre_weights(const IrreducibleRep& rho) {
  const int p = static_cast<int>(rho.eta.v.field()->p());
  SerreWeight w1{rho.r, rho.eta.c};
  SerreWeight w2{p - 1 - rho.r, mod(static_cast<long long>(rho.eta.c) + rho.r, p - 1)};
  if (w2 < w1) std::swap(w1, w2);
  return {w1, w2};
}

const Field& field_of(const GaloisRepDesc& rho) {
  if (auto* red = std::get_if<ReducibleRep>(&rho)) return *red->first.v.field();
  return *std::get<IrreducibleRep>(rho).eta.v.field();
}

GaloisRepDesc lift(const GaloisRepDesc& rho, const Embedding& e) {
  if (auto* red = std::get_if<ReducibleRep>(&rho)) return make_reducible(lift(red->first, e), lift(red->second, e));
  const auto& irr = std::get<IrreducibleRep>(rho);
  return make_irreducible(irr.r, lift(irr.eta, e));
}

// ---- The chain ------------------------------------------------------------

namespace {

EGCurve basic_layout(FieldPtr field, Parity parity) {
  const int p = static_cast<int>(field->p());
  const int half = (p - 1) / 2;
  auto w = [p](int r, long long a) { return SerreWeight{r, mod(a, p - 1)}; };
  EGCurve c;
  c.field = field;
  c.parity = parity;
  c.zeta = basic_central_char(*field, parity);
  c.to_basic = omega_power(*field, 0);

  if (parity == Parity::Even) {
    for (int k = 0; k <= half; ++k) {
      IrredNode n;
      n.index = static_cast<std::size_t>(k);
      n.smooth = (k == 0 || k == half);
      n.r = n.smooth ? 0 : 2 * k;
      n.a = n.smooth ? k : mod(-k, p - 1);
      if (k >= 1) n.left_component = static_cast<std::size_t>(k - 1);
      if (k < half) n.right_component = static_cast<std::size_t>(k);
      c.nodes.push_back(n);
    }
    for (int k = 0; k < half; ++k) {
      EGComponent comp;
      comp.index = static_cast<std::size_t>(k);
      comp.left = w(2 * k, -k);
      comp.right = w(p - 3 - 2 * k, k + 1);
      comp.left_node = static_cast<std::size_t>(k);
      comp.right_node = static_cast<std::size_t>(k + 1);
      comp.omega_x = mod(k + 1, p - 1);
      comp.omega_inv = mod(-k, p - 1);
      if (k == 0) {
        comp.chart = ChartKind::Z1;
      } else if (k == half - 1) {
        comp.chart = ChartKind::Z1;
        comp.value_inverted = true;
      }
      c.components.push_back(comp);
    }
  } else {
    for (int j = 0; j < half; ++j) {
      IrredNode n;
      n.index = static_cast<std::size_t>(j);
      n.r = 2 * j + 1;
      n.a = mod(-(j + 1), p - 1);
      n.left_component = static_cast<std::size_t>(j);
      n.right_component = static_cast<std::size_t>(j + 1);
      c.nodes.push_back(n);
    }
    for (int j = 0; j <= half; ++j) {
      EGComponent comp;
      comp.index = static_cast<std::size_t>(j);
      comp.left = SerreWeight{p - 2 - 2 * j, mod(j, p - 1)};
      comp.right = SerreWeight{2 * j - 1, mod(-j, p - 1)};
      if (j >= 1) comp.left_node = static_cast<std::size_t>(j - 1);
      if (j < half) comp.right_node = static_cast<std::size_t>(j);
      if (j == 0 || j == half) {
        comp.chart = ChartKind::Trace;
        comp.omega_x = comp.omega_inv = j;
      } else {
        comp.omega_x = j;
        comp.omega_inv = mod(-j, p - 1);
      }
      c.components.push_back(comp);
    }
  }
  return c;
}

bool is_exceptional_value(const EGComponent& comp, const FieldElement& value) {
  const Field& k = *value.field();
  if (comp.chart == ChartKind::Z1) return value == k.one() || value == -k.one();
  if (comp.chart == ChartKind::Trace) return value == k.element(2) || value == k.element(-2);
  return false;
}

RepOfPoint basic_rep(const EGPoint& pt, const EGCurve& curve) {
  const Field& k = *curve.field;
  if (auto* n = std::get_if<NodePoint>(&pt.where)) {
    const IrredNode& node = curve.nodes.at(n->node);
    return {make_irreducible(node.r, omega_power(k, node.a)), curve.field, false};
  }
  const auto& red = std::get<RedPoint>(pt.where);
  const EGComponent& comp = curve.components.at(red.component);
  if (comp.chart == ChartKind::Trace) {
    auto roots = k.solve_quadratic(-red.value, k.one());
    if (!roots.roots.empty()) {
      const FieldElement z = roots.roots.front();
      return {make_reducible(smooth_char(comp.omega_x, z.inv()), smooth_char(comp.omega_inv, z)), curve.field,
              false};
    }
    const QuadraticExtension& ext = k.quadratic_extension();
    const Field& big = *ext.field;
    const FieldElement z = big.solve_quadratic(-ext.embedding.up(red.value), big.one()).roots.front();
    return {make_reducible(smooth_char(comp.omega_x, z.inv()), smooth_char(comp.omega_inv, z)), ext.field, true};
  }
  const FieldElement x = comp.value_inverted ? red.value.inv() : red.value;
  return {make_reducible(smooth_char(comp.omega_x, x.inv()), smooth_char(comp.omega_inv, x)), curve.field, false};
}

}  // namespace

EGCurve build_curve(FieldPtr field, Parity parity) { return basic_layout(std::move(field), parity); }

EGCurve build_curve(FieldPtr field, const CentralChar& zeta) {
  const BasicReduction bt = basic_twist(zeta);
  if (bt.needs_ext)
    fail(ErrorKind::NeedsExtension, "the twist to the basic curve needs the quadratic extension of the field");
  EGCurve c = basic_layout(std::move(field), bt.parity);
  c.zeta = zeta;
  c.to_basic = bt.eta;
  return c;
}

EGCurve lift(const EGCurve& curve, const Embedding& e) {
  EGCurve out = curve;
  out.field = e.to();
  out.zeta = lift(curve.zeta, e);
  out.to_basic = lift(curve.to_basic, e);
  return out;
}

std::pair<SerreWeight, SerreWeight> node_weights(const EGCurve& curve, std::size_t node) {
  const IrredNode& n = curve.nodes.at(node);
  return serre_weights({n.r, omega_power(*curve.field, n.a)});
}

EGPoint node_point(const EGCurve& curve, std::size_t node) {
  if (node >= curve.nodes.size()) fail(ErrorKind::UnknownPoint, "no node " + std::to_string(node));
  return {NodePoint{node}, false};
}

EGPoint red_point(const EGCurve& curve, std::size_t component, const FieldElement& value) {
  if (component >= curve.components.size())
    fail(ErrorKind::UnknownPoint, "no component " + std::to_string(component));
  const EGComponent& comp = curve.components[component];
  if (comp.chart != ChartKind::Trace && value.is_zero())
    fail(ErrorKind::UnknownPoint, "chart value 0 is a node, not a reducible point");
  return {RedPoint{component, value}, is_exceptional_value(comp, value)};
}

std::vector<EGPoint> enumerate_points(const EGCurve& curve) {
  std::vector<EGPoint> out;
  for (std::size_t i = 0; i < curve.nodes.size(); ++i) out.push_back(node_point(curve, i));
  const auto units = curve.field->units();
  for (const auto& comp : curve.components) {
    if (comp.chart == ChartKind::Trace) out.push_back(red_point(curve, comp.index, curve.field->zero()));
    for (const auto& u : units) out.push_back(red_point(curve, comp.index, u));
  }
  return out;
}

std::vector<EGPoint> exceptional_points(const EGCurve& curve) {
  const Field& k = *curve.field;
  const FieldElement s = curve.parity == Parity::Even ? k.one() : k.element(2);
  std::vector<EGPoint> out;
  for (const auto& comp : curve.components) {
    if (!comp.exterior()) continue;
    out.push_back(red_point(curve, comp.index, s));
    out.push_back(red_point(curve, comp.index, -s));
  }
  return out;
}

EGPoint lift(const EGPoint& pt, const Embedding& e) {
  EGPoint out = pt;
  if (auto* red = std::get_if<RedPoint>(&out.where)) red->value = e.up(red->value);
  return out;
}

RepOfPoint rep_of_point(const EGPoint& pt, const EGCurve& curve) {
  RepOfPoint out = basic_rep(pt, curve);
  SmoothChar back = inverse(curve.to_basic);
  if (out.extension) back = lift(back, curve.field->quadratic_extension().embedding);
  out.rep = twist_rep(out.rep, back);
  return out;
}

EGPoint point_of_rep(const GaloisRepDesc& rho, const EGCurve& curve) {
  const Field& f = field_of(rho);
  const Embedding* emb = nullptr;
  if (&f != curve.field.get()) {
    const QuadraticExtension& ext = curve.field->quadratic_extension();
    if (ext.field.get() != &f) fail(ErrorKind::InvalidArgument, "representation lives over an unrelated field");
    emb = &ext.embedding;
  }
  const SmoothChar eta0 = emb ? lift(curve.to_basic, *emb) : curve.to_basic;
  const GaloisRepDesc b = twist_rep(rho, eta0);
  const SmoothChar want = omega_power(f, 1) * basic_central_char(f, curve.parity);
  if (determinant(b) != want)
    fail(ErrorKind::ParityMismatch, "determinant does not match omega * zeta");
  auto rational = [&](const FieldElement& a) {
    if (!emb) return a;
    auto d = emb->down(a);
    if (!d) fail(ErrorKind::UnknownPoint, "representation is not rational over the curve's field");
    return *d;
  };

  if (auto* irr = std::get_if<IrreducibleRep>(&b)) {
    const auto weights = serre_weights(*irr);
    for (std::size_t i = 0; i < curve.nodes.size(); ++i)
      if (node_weights(curve, i) == weights) return node_point(curve, i);
    fail(ErrorKind::UnknownPoint, "no node with these Serre weights");
  }
  const auto& red = std::get<ReducibleRep>(b);
  for (const auto& comp : curve.components) {
    if (comp.chart == ChartKind::Trace) {
      if (red.first.c == comp.omega_x && red.second.c == comp.omega_x)
        return red_point(curve, comp.index, rational(red.first.v + red.second.v));
      continue;
    }
    const SmoothChar* lead = nullptr;
    if (red.first.c == comp.omega_x && red.second.c == comp.omega_inv) lead = &red.first;
    if (red.second.c == comp.omega_x && red.first.c == comp.omega_inv) lead = &red.second;
    if (!lead) continue;
    const FieldElement x = lead->v.inv();
    return red_point(curve, comp.index, rational(comp.value_inverted ? x.inv() : x));
  }
  fail(ErrorKind::UnknownPoint, "representation does not lie on this curve");
}

EGPoint twist_curve(const EGPoint& pt, const SmoothChar& eta, const EGCurve& src, const EGCurve& dst) {
  const RepOfPoint r = rep_of_point(pt, src);
  SmoothChar e = eta;
  if (r.field.get() != eta.v.field()) {
    if (r.field.get() == src.field->quadratic_extension().field.get() && eta.v.field() == src.field.get())
      e = lift(eta, src.field->quadratic_extension().embedding);
    else
      fail(ErrorKind::InvalidArgument, "twist character lives over an unrelated field");
  }
  return point_of_rep(twist_rep(r.rep, e), dst);
}

}  // namespace lzeta
