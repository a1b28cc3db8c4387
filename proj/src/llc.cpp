#include "lzeta/llc.hpp"

#include <algorithm>

#include "lzeta/error.hpp"

namespace lzeta {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

SmoothChar flip(const SmoothChar& eta) { return {eta.c, -eta.v}; }  // eta * unr(-1)

int prime_of(const SmoothChar& eta) { return static_cast<int>(eta.v.field()->p()); }

}  // namespace

Constituent make_ps(int r, const FieldElement& x, const SmoothChar& eta) {
  const int p = prime_of(eta);
  if (r < 0 || r > p - 2) fail(ErrorKind::InvalidArgument, "principal series parameter r out of range");
  if (x.is_zero()) fail(ErrorKind::InvalidArgument, "principal series needs x != 0");
  const Field& k = *x.field();
  if (r == 0 && (x == k.one() || x == -k.one()))
    fail(ErrorKind::InvalidArgument, "pi(0, +-1, eta) is reducible");
  return std::min(PSConst{r, x, eta}, PSConst{r, -x, flip(eta)});
}

Constituent make_ss(int r, const SmoothChar& eta) {
  const int p = prime_of(eta);
  if (r < 0 || r > p - 1) fail(ErrorKind::InvalidArgument, "supersingular parameter r out of range");
  // pi(r, 0, eta) = pi(p-1-r, 0, eta w^r), and unr(-1) twists act trivially.
  SSConst best{r, eta};
  const SSConst alt{p - 1 - r, eta * omega_power(*eta.v.field(), r)};
  for (const auto& c : {SSConst{r, eta}, alt}) {
    best = std::min(best, c);
    best = std::min(best, SSConst{c.r, flip(c.eta)});
  }
  return best;
}

std::vector<Constituent> ps_semisimplification(int r, const FieldElement& x, const SmoothChar& eta) {
  const Field& k = *x.field();
  if (r == 0 && (x == k.one() || x == -k.one())) {
    const SmoothChar e = x == k.one() ? eta : flip(eta);
    return {CharConst{e}, StConst{e}};
  }
  return {make_ps(r, x, eta)};
}

SmoothGRepDesc pi_of_rho(const GaloisRepDesc& rho) {
  SmoothGRepDesc out;
  if (auto* irr = std::get_if<IrreducibleRep>(&rho)) {
    out.constituents.push_back(make_ss(irr->r, irr->eta));
    return out;
  }
  const auto& red = std::get<ReducibleRep>(rho);
  const Field& k = *red.first.v.field();
  const int p = static_cast<int>(k.p());
  // rho = (unr(x) w^{r+1} + unr(1/x)) (x) eta
  const SmoothChar ratio = red.first * inverse(red.second);
  const int r = mod(ratio.c - 1LL, p - 1);
  const auto x = k.sqrt(ratio.v.inv());
  if (!x) fail(ErrorKind::NeedsExtension, "chart coordinate of rho is not defined over the field");
  const SmoothChar eta = red.second * unr(*x);
  for (auto& c : ps_semisimplification(r, *x, eta)) out.constituents.push_back(c);
  const SmoothChar eta2 = omega_power(k, r + 1) * eta;
  for (auto& c : ps_semisimplification(mod(p - 3LL - r, p - 1), x->inv(), eta2)) out.constituents.push_back(c);
  return out;
}

HeckeModuleDesc invariants_of(const Constituent& c) {
  return std::visit(
      overloaded{
          [](const PSConst& ps) -> HeckeModuleDesc {
            const int q = prime_of(ps.eta);
            const TorusChar chi = make_torus_char(ps.eta.c, static_cast<long long>(ps.eta.c) + ps.r, q);
            const FieldElement chi2 = ps.x * ps.eta.v;
            const FieldElement z2 = ps.eta.v * ps.eta.v;
            if (ps.r != 0) return RegStd{chi2.field()->zero(), chi2, z2, chi};
            return NonRegStd{chi2, z2, chi};
          },
          [](const SSConst& ss) -> HeckeModuleDesc {
            const int q = prime_of(ss.eta);
            const TorusChar chi = make_torus_char(static_cast<long long>(ss.eta.c) + ss.r, ss.eta.c, q);
            const FieldElement z2 = ss.eta.v * ss.eta.v;
            const FieldElement zero = z2.field()->zero();
            if (chi.a != chi.b) return RegStd{zero, zero, z2, chi};
            return NonRegStd{zero, z2, chi};
          },
          [](const CharConst& ch) -> HeckeModuleDesc {
            return HChar{0, ch.eta.v, {ch.eta.c, ch.eta.c}};
          },
          [](const StConst& st) -> HeckeModuleDesc {
            return HChar{-1, -st.eta.v, {st.eta.c, st.eta.c}};
          },
      },
      c);
}

SSum invariants_of(const SmoothGRepDesc& pi) {
  std::vector<HeckeModuleDesc> parts;
  for (const auto& c : pi.constituents) parts.push_back(invariants_of(c));
  return direct_sum(parts);
}

Constituent twist_constituent(const Constituent& c, const SmoothChar& eta) {
  return std::visit(overloaded{
                        [&](const PSConst& ps) { return make_ps(ps.r, ps.x, ps.eta * eta); },
                        [&](const SSConst& ss) { return make_ss(ss.r, ss.eta * eta); },
                        [&](const CharConst& ch) -> Constituent { return CharConst{ch.eta * eta}; },
                        [&](const StConst& st) -> Constituent { return StConst{st.eta * eta}; },
                    },
                    c);
}

CentralChar central_character(const Constituent& c) {
  return std::visit(overloaded{
                        [](const PSConst& ps) { return omega_power(*ps.eta.v.field(), ps.r) * square(ps.eta); },
                        [](const SSConst& ss) { return omega_power(*ss.eta.v.field(), ss.r) * square(ss.eta); },
                        [](const CharConst& ch) { return square(ch.eta); },
                        [](const StConst& st) { return square(st.eta); },
                    },
                    c);
}

const Field& field_of(const Constituent& c) {
  return std::visit([](const auto& x) -> const Field& { return *x.eta.v.field(); }, c);
}

std::string kind_name(const Constituent& c) {
  static const char* names[] = {"ps", "ss", "char", "st"};
  return names[c.index()];
}

BlockDesc block_of(const EGPoint& x, const EGCurve& curve) {
  const RepOfPoint rep = rep_of_point(x, curve);
  BlockDesc out;
  out.field = rep.field;
  out.type = x.is_node() ? 1 : (x.exceptional ? 3 : 2);
  for (const auto& c : pi_of_rho(rep.rep).constituents)
    if (std::find(out.constituents.begin(), out.constituents.end(), c) == out.constituents.end())
      out.constituents.push_back(c);
  return out;
}

TheoremReport verify_theorem(const EGPoint& x, const Lmap& map) {
  TheoremReport rep;
  rep.point = x;
  FiberResult fib = fiber(x, map);
  RepOfPoint rho = rep_of_point(x, map.curve);
  if (fib.field != rho.field) {
    const Embedding& e = map.field->quadratic_extension().embedding;
    if (fib.extension) {
      rho.rep = lift(rho.rep, e);
      rho.field = e.to();
    } else {
      for (auto& v : fib.points) v = lift(v, e);
      fib.space = lift(fib.space, e);
      fib.field = e.to();
    }
  }
  rep.field = fib.field;
  rep.fiber = fib.points;
  rep.ramified = fib.ramified;

  std::vector<HeckeModuleDesc> parts;
  std::size_t in_d1 = 0;
  for (const auto& v : fib.points) {
    const HeckeModuleDesc m = asph(fib.space, v);
    if (length(m) == 2) ++in_d1;
    parts.push_back(semisimplify(m));
    if (fib.ramified) parts.push_back(semisimplify(m));
  }
  rep.lhs = direct_sum(parts);
  rep.rhs = semisimplify(invariants_of(pi_of_rho(rho.rep)));

  std::size_t want_len = 0, want_fiber = 0;
  if (x.is_node()) {
    rep.case_tag = "i";
    want_len = 1;
    want_fiber = 1;
  } else if (!x.exceptional) {
    rep.case_tag = "ii";
    want_len = 2;
    want_fiber = 2;
  } else if (map.curve.parity == Parity::Even) {
    rep.case_tag = "iiie";
    want_len = 3;
    want_fiber = 2;
  } else {
    rep.case_tag = "iiio";
    want_len = 2;
    want_fiber = 1;
  }

  std::vector<std::string> problems;
  if (!iso_equal(rep.lhs, rep.rhs)) problems.emplace_back("lhs and rhs differ");
  if (rep.lhs.members.size() != want_len) problems.emplace_back("unexpected length");
  if (fib.points.size() != want_fiber) problems.emplace_back("unexpected fiber size");
  if (rep.ramified != (rep.case_tag == "iiio")) problems.emplace_back("ramification mismatch");
  if (rep.case_tag == "i" && !std::all_of(rep.lhs.members.begin(), rep.lhs.members.end(), is_supersingular))
    problems.emplace_back("node is not supersingular");
  if (rep.case_tag == "iiie" && in_d1 != 1) problems.emplace_back("exceptional fiber should meet D(1) once");
  if (rep.case_tag != "iiie" && in_d1 != 0) problems.emplace_back("unexpected fiber point in D(1)");
  rep.pass = problems.empty();
  for (const auto& s : problems) rep.detail += (rep.detail.empty() ? "" : "; ") + s;
  return rep;
}

Parametrization parametrize(const Constituent& c, const Lmap& map) {
  const Field& f = field_of(c);
  if (&f != map.field.get()) {
    const QuadraticExtension& ext = map.field->quadratic_extension();
    if (&f != ext.field.get()) fail(ErrorKind::InvalidArgument, "constituent lives over an unrelated field");
    Parametrization out = parametrize(c, lift(map, ext.embedding));
    if (auto* red = std::get_if<RedPoint>(&out.point.where)) {
      auto d = ext.embedding.down(red->value);
      if (!d) fail(ErrorKind::UnknownPoint, "constituent is not attached to a rational point");
      out.point = red_point(map.curve, red->component, *d);
    }
    return out;
  }
  if (central_character(c) != map.space.zeta)
    fail(ErrorKind::ParityMismatch, "constituent has a different central character");
  const HeckeModuleDesc m = invariants_of(c);
  const int q = map.space.q();
  SatakePoint v;
  if (auto* r = std::get_if<RegStd>(&m)) {
    v = crossed_point(map.space, r->chi, r->x, r->y);
  } else if (auto* n = std::get_if<NonRegStd>(&m)) {
    v = line_point(map.space, orbit_of(n->chi, q), n->z1);
  } else {
    const auto& h = std::get<HChar>(m);
    v = line_point(map.space, orbit_of(h.chi, q), h.eps == 0 ? h.c : -h.c);
  }
  Parametrization out;
  out.point = eval(v, map);
  out.multiplicity = (out.point.exceptional && map.curve.parity == Parity::Odd) ? 2 : 1;
  out.payload = m;
  return out;
}

}  // namespace lzeta
