#include "lzeta/suite.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "lzeta/error.hpp"

namespace lzeta {

namespace {

constexpr std::size_t kMaxFailures = 8;

std::string label_text(const EGComponent& c) { return to_string(c.left) + " | " + to_string(c.right); }

std::uint64_t draw(std::mt19937_64& gen, std::uint64_t bound) { return gen() % bound; }

}  // namespace

void CheckResult::fail(const std::string& what) {
  pass = false;
  if (failures.size() < kMaxFailures) failures.push_back(what);
}

Json to_json(const CheckResult& r) {
  return {{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"failures", r.failures}};
}

CheckResult check_field(const FieldPtr& k) {
  CheckResult r{"field"};
  const std::uint64_t q = k->order();
  const unsigned n = k->degree();
  const FieldElement x = k->generator();
  r.expect(k->modulus().size() == n + 1 && k->modulus().back() == 1, "modulus is monic of degree n");
  // X generates F_{p^n} exactly when its Frobenius orbit has length n.
  FieldElement y = x;
  for (unsigned d = 1; d <= n; ++d) {
    y = y.pow(k->p());
    r.expect((y == x) == (d == n), "Frobenius orbit of X has length n");
  }
  std::mt19937_64 gen(q);
  const std::uint64_t samples = std::min<std::uint64_t>(q - 1, 4096);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const FieldElement a = samples == q - 1 ? k->element_at(i + 1) : k->element_at(1 + draw(gen, q - 1));
    r.expect((a * a.inv()).is_one(), "a * a^{-1} = 1");
    const FieldElement b = k->element_at(draw(gen, q)), c = k->element_at(draw(gen, q));
    const QuadraticRoots roots = k->solve_quadratic(b, c);
    for (const auto& s : roots.roots) r.expect((s * s + b * s + c).is_zero(), "quadratic root satisfies y^2 + by + c");
    const bool splits = k->is_square(b * b - k->element(4) * c);
    r.expect(splits == !roots.roots.empty(), "quadratic splits iff its discriminant is a square");
    const auto& ext = k->quadratic_extension();
    const FieldElement ua = ext.embedding.up(a), ub = ext.embedding.up(b);
    r.expect(ext.embedding.up(a * b) == ua * ub && ext.embedding.up(a + b) == ua + ub, "embedding is a ring map");
    r.expect(ext.embedding.down(ua) == a, "embedding round trip");
  }
  return r;
}

CheckResult check_orbits(int p) {
  CheckResult r{"orbits"};
  std::size_t total = 0;
  for (int e = 0; e < p - 1; ++e) {
    const auto fib = fiber_of_restriction(p, e);
    total += fib.size();
    const auto nonreg = std::count_if(fib.begin(), fib.end(), [](const OrbitGamma& g) { return !g.regular; });
    if (e % 2 == 0)
      r.expect(fib.size() == static_cast<std::size_t>((p + 1) / 2) && nonreg == 2,
               "even restriction: (q+1)/2 orbits, two non-regular");
    else
      r.expect(fib.size() == static_cast<std::size_t>((p - 1) / 2) && nonreg == 0,
               "odd restriction: (q-1)/2 orbits, all regular");
    for (const auto& g : fib) r.expect(restrict_to_center(g, p) == e, "orbit restricts to e");
  }
  r.expect(total == static_cast<std::size_t>(p * (p - 1) / 2), "(q^2 - q)/2 orbits in total");
  r.expect(all_orbits(p).size() == total, "fibers partition the orbits");
  return r;
}

CheckResult check_chain(const EGCurve& curve) {
  CheckResult r{std::string("chain-") + to_string(curve.parity)};
  const int p = curve.p();
  const bool even = curve.parity == Parity::Even;
  r.expect(curve.components.size() == static_cast<std::size_t>(even ? (p - 1) / 2 : (p + 1) / 2),
           "number of components");
  r.expect(curve.nodes.size() == static_cast<std::size_t>(even ? (p + 1) / 2 : (p - 1) / 2), "|X^irred|");
  const auto smooth = std::count_if(curve.nodes.begin(), curve.nodes.end(), [](const IrredNode& n) { return n.smooth; });
  r.expect(smooth == (even ? 2 : 0), "smooth irreducible points");
  r.expect(exceptional_points(curve).size() == 4, "exactly four exceptional points");

  for (const auto& n : curve.nodes) {
    const auto [w1, w2] = node_weights(curve, n.index);
    if (n.smooth) {
      r.expect(w1.a == w2.a && ((w1.r == 0 && w2.r == p - 1) || (w2.r == 0 && w1.r == p - 1)),
               "smooth point weights {Sym^0, Sym^{p-1}} (x) det^a");
      continue;
    }
    const EGComponent& lc = curve.components.at(*n.left_component);
    const EGComponent& rc = curve.components.at(*n.right_component);
    auto on = [](const SerreWeight& w, const EGComponent& c) { return c.left == w || c.right == w; };
    r.expect((on(w1, lc) && on(w2, rc)) || (on(w2, lc) && on(w1, rc)),
             "double point weights are shared with both adjacent components");
  }

  std::set<GaloisRepDesc> reps;
  const SmoothChar want = omega_power(*curve.field, 1) * curve.zeta;
  for (const auto& x : enumerate_points(curve)) {
    const RepOfPoint rho = rep_of_point(x, curve);
    SmoothChar w = want;
    if (rho.extension) w = lift(want, curve.field->quadratic_extension().embedding);
    r.expect(determinant(rho.rep) == w, "det rho = omega zeta");
    r.expect(point_of_rep(rho.rep, curve) == x, "point_of_rep inverts rep_of_point");
    if (!rho.extension) r.expect(reps.insert(rho.rep).second, "distinct points carry distinct representations");
  }
  return r;
}

CheckResult check_p5_labels() {
  CheckResult r{"labels-p5"};
  const FieldPtr k = Field::make(5, 1);
  const EGCurve even = build_curve(k, Parity::Even);
  const EGCurve odd = build_curve(k, Parity::Odd);
  const std::vector<std::string> even_labels{"Sym^0 | Sym^2 det^1", "Sym^2 det^3 | Sym^0 det^2"};
  const std::vector<std::string> odd_labels{"Sym^3 | \"Sym^-1\"", "Sym^1 det^1 | Sym^1 det^3",
                                            "\"Sym^-1\" det^2 | Sym^3 det^2"};
  r.expect(even.components.size() == 2 && odd.components.size() == 3, "component counts at p = 5");
  for (std::size_t i = 0; i < even.components.size() && i < 2; ++i)
    r.expect(label_text(even.components[i]) == even_labels[i], "even label " + std::to_string(i));
  for (std::size_t i = 0; i < odd.components.size() && i < 3; ++i)
    r.expect(label_text(odd.components[i]) == odd_labels[i], "odd label " + std::to_string(i));
  const auto [w1, w2] = node_weights(even, 1);
  const std::set<std::string> got{to_string(w1), to_string(w2)};
  r.expect(got == std::set<std::string>{"Sym^2 det^1", "Sym^2 det^3"}, "even double point weights");
  return r;
}

CheckResult check_satake(const SatakeSpace& space) {
  CheckResult r{std::string("satake-") + to_string(parity_of(space.zeta))};
  const int q = space.q();
  const std::uint64_t card = space.field->order();
  auto fib = fiber_of_restriction(q, space.zeta.c);
  r.expect(fib.size() == space.components.size(), "one component per orbit");
  std::uint64_t expected_points = 0;
  bool seen_regular = false;
  for (const auto& c : space.components) {
    r.expect(std::find(fib.begin(), fib.end(), c.gamma) != fib.end(), "component orbit restricts to zeta");
    r.expect(c.gamma.regular == (c.shape == ComponentShape::CrossedLines), "shape matches regularity");
    r.expect(!(seen_regular && !c.gamma.regular), "non-regular components come first");
    seen_regular = seen_regular || c.gamma.regular;
    if (c.gamma.regular) r.expect(orbit_of(c.first, q) == c.gamma, "ordering belongs to the orbit");
    expected_points += c.gamma.regular ? 2 * card - 1 : card;
  }
  const auto pts = enumerate_points(space);
  r.expect(pts.size() == expected_points, "point count");
  for (const auto& v : pts) r.expect(theta(space, v) == space.zeta, "theta(v) = zeta");

  std::vector<HeckeModuleDesc> ss;
  for (const auto& v : pts)
    if (v.is_origin()) ss.push_back(asph(space, v));
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (std::size_t j = i + 1; j < ss.size(); ++j)
      r.expect(!iso_equal(ss[i], ss[j]), "supersingular modules of distinct components differ");
  return r;
}

CheckResult check_geometry(const Lmap& map) {
  CheckResult r{std::string("geometry-") + to_string(map.curve.parity)};
  const GeometryReport g = verify_geometry(map);
  r.cases = g.points_checked;
  for (const auto& f : g.failures) r.fail(f);
  const int p = map.curve.p();
  if (map.curve.parity == Parity::Even)
    r.expect(g.open_immersions == static_cast<std::size_t>(p - 1) && g.quadratic_covers == 0,
             "even map: p - 1 open immersions");
  else
    r.expect(g.open_immersions == static_cast<std::size_t>(p - 3) && g.quadratic_covers == 2,
             "odd map: p - 3 open immersions and two quadratic covers");
  return r;
}

CheckResult check_theorem(const Lmap& map, std::vector<TheoremReport>* reports) {
  CheckResult r{std::string("theorem-") + to_string(map.curve.parity)};
  std::map<std::string, std::size_t> tally;
  for (const auto& x : enumerate_points(map.curve)) {
    TheoremReport rep = verify_theorem(x, map);
    ++tally[rep.case_tag];
    r.expect(rep.pass, "theorem at a point of case " + rep.case_tag + ": " + rep.detail);
    if (reports) reports->push_back(std::move(rep));
  }
  const bool even = map.curve.parity == Parity::Even;
  r.expect(tally[even ? "iiie" : "iiio"] == 4 && tally[even ? "iiio" : "iiie"] == 0, "four exceptional points");
  r.expect(tally["i"] == map.curve.nodes.size(), "case (i) at every irreducible point");
  return r;
}

CheckResult check_parametrization(const Lmap& map) {
  CheckResult r{std::string("parametrization-") + to_string(map.curve.parity)};
  const bool odd = map.curve.parity == Parity::Odd;
  for (const auto& x : enumerate_points(map.curve)) {
    const BlockDesc block = block_of(x, map.curve);
    const int type = x.is_node() ? 1 : (x.exceptional ? 3 : 2);
    r.expect(block.type == type, "block type matches the point");
    const std::size_t size = type == 1 ? 1 : type == 2 ? 2 : (odd ? 1 : 3);
    r.expect(block.constituents.size() == size, "block size");
    CentralChar zeta = map.space.zeta;
    if (block.field.get() != map.field.get()) zeta = lift(zeta, map.field->quadratic_extension().embedding);
    for (const auto& c : block.constituents) {
      r.expect(central_character(c) == zeta, "constituent has central character zeta");
      const HeckeModuleDesc m = invariants_of(c);
      const auto& simple = semisimplify(m).members;
      r.expect(simple.size() == 1, "invariants of an irreducible constituent are simple");
      if (simple.size() != 1) continue;
      r.expect(restrict_to_center(component_of(simple[0], map.space.q()), map.space.q()) == zeta.c &&
                   u2_scalar(simple[0]) == zeta.v,
               "invariants are supported on the central character");
      const Parametrization par = parametrize(c, map);
      r.expect(par.point == x, "parametrize returns the block's point");
      r.expect(par.multiplicity == ((odd && x.exceptional) ? 2 : 1), "multiplicity");
    }
  }
  return r;
}

std::vector<TwistSample> twist_samples(const FieldPtr& k, Parity parity, std::uint64_t seed, std::size_t count) {
  const int p = static_cast<int>(k->p());
  const QuadraticExtension& ext = k->quadratic_extension();
  std::mt19937_64 gen(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(p) * 1000003ULL +
                      k->degree() * 101ULL + (parity == Parity::Odd ? 1 : 0));
  std::vector<TwistSample> out;
  for (std::size_t i = 0; i < count; ++i) {
    TwistSample s;
    if (i % 4 < 2) {
      s.zeta = basic_central_char(*k, parity);
    } else {
      const long long c = 2LL * static_cast<long long>(draw(gen, (p - 1) / 2)) + (parity == Parity::Odd ? 1 : 0);
      s.zeta = smooth_char(c, k->element_at(1 + draw(gen, k->order() - 1)));
    }
    FieldElement v;
    if (i % 2 == 0) {
      do {
        v = ext.field->element_at(1 + draw(gen, ext.field->order() - 1));
      } while (ext.embedding.down(v).has_value());
      s.eta_needs_ext = true;
    } else {
      v = ext.embedding.up(k->element_at(1 + draw(gen, k->order() - 1)));
    }
    s.eta = smooth_char(static_cast<long long>(draw(gen, p - 1)), v);
    out.push_back(s);
  }
  return out;
}

TwistChecks check_twisting(const FieldPtr& k, const std::vector<TwistSample>& samples) {
  const std::string tag = samples.empty() ? "" : std::string("-") + to_string(parity_of(samples.front().zeta));
  TwistChecks out{CheckResult("twist-asph" + tag), CheckResult("twist-invariants" + tag),
                  CheckResult("commuting-square" + tag)};
  const QuadraticExtension& ext = k->quadratic_extension();
  const FieldPtr& big = ext.field;
  for (const auto& s : samples) {
    const CentralChar zeta = lift(s.zeta, ext.embedding);
    const Twist t = twist_of(s.eta);
    const CentralChar zeta2 = twisted_central_char(zeta, t);
    const SatakeSpace src = build_space(big, zeta);
    const SatakeSpace dst = build_space(big, zeta2);
    const EGCurve src_curve = build_curve(big, zeta);
    const EGCurve dst_curve = build_curve(big, zeta2);
    const Lmap src_map = build_map(src, src_curve);
    const Lmap dst_map = build_map(dst, dst_curve);
    const int q = src.q();

    for (const auto& v0 : enumerate_points(build_space(k, s.zeta))) {
      const SatakePoint v = lift(v0, ext.embedding);
      const SatakePoint tv = twist_point(src, v, t, dst);
      out.asph.expect(iso_equal(asph(dst, tv), twist_module(asph(src, v), t, q)), "ASph(v . eta) = ASph(v) . eta");
      out.square.expect(eval(tv, dst_map) == twist_curve(eval(v, src_map), s.eta, src_curve, dst_curve),
                        "L(v . eta) = L(v) (x) eta");
    }

    for (const auto& x0 : enumerate_points(build_curve(k, basic_central_char(*k, parity_of(s.zeta))))) {
      // Points of X_zeta over the base field, in the basic layout.
      const EGPoint x = lift(x0, ext.embedding);
      const RepOfPoint rho = rep_of_point(x, src_curve);
      const SmoothChar eta = rho.extension ? lift(s.eta, big->quadratic_extension().embedding) : s.eta;
      const SmoothGRepDesc pi = pi_of_rho(rho.rep);
      std::vector<Constituent> twisted;
      for (const auto& c : pi.constituents) {
        const Constituent tc = twist_constituent(c, eta);
        twisted.push_back(tc);
        out.invariants.expect(iso_equal(invariants_of(tc), twist_module(invariants_of(c), twist_of(eta), q)),
                              "(pi (x) eta)^{I(1)} = pi^{I(1)} (x) eta");
      }
      std::vector<Constituent> direct = pi_of_rho(twist_rep(rho.rep, eta)).constituents;
      std::sort(twisted.begin(), twisted.end());
      std::sort(direct.begin(), direct.end());
      out.invariants.expect(twisted == direct, "pi(rho (x) eta) = pi(rho) (x) eta");
    }
  }
  return out;
}

}  // namespace lzeta
