#include "lzeta/chars.hpp"

#include "lzeta/error.hpp"

namespace lzeta {

int mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

TorusChar make_torus_char(long long a, long long b, int q) { return {mod(a, q - 1), mod(b, q - 1)}; }

TorusChar swapped(const TorusChar& chi) { return {chi.b, chi.a}; }

TorusChar twist_char(const TorusChar& chi, int r, int q) {
  return make_torus_char(static_cast<long long>(chi.a) + r, static_cast<long long>(chi.b) + r, q);
}

OrbitGamma orbit_of(const TorusChar& chi, int q) {
  TorusChar c = make_torus_char(chi.a, chi.b, q);
  if (c.b < c.a) c = swapped(c);
  return {c, c.a != c.b};
}

OrbitGamma twist_orbit(const OrbitGamma& gamma, int r, int q) { return orbit_of(twist_char(gamma.rep, r, q), q); }

int restrict_to_center(const OrbitGamma& gamma, int q) { return mod(gamma.rep.a + gamma.rep.b, q - 1); }

std::vector<OrbitGamma> fiber_of_restriction(int q, int e) {
  std::vector<OrbitGamma> out;
  for (int a = 0; a < q - 1; ++a) {
    const int b = mod(e - a, q - 1);
    if (a <= b) out.push_back({{a, b}, a != b});
  }
  return out;
}

std::vector<OrbitGamma> all_orbits(int q) {
  std::vector<OrbitGamma> out;
  for (int a = 0; a < q - 1; ++a)
    for (int b = a; b < q - 1; ++b) out.push_back({{a, b}, a != b});
  return out;
}

SmoothChar smooth_char(long long c, const FieldElement& v) {
  if (v.is_zero()) fail(ErrorKind::InvalidArgument, "a character value must be nonzero");
  return {mod(c, static_cast<int>(v.field()->p()) - 1), v};
}

SmoothChar omega_power(const Field& k, long long e) { return smooth_char(e, k.one()); }

SmoothChar unr(const FieldElement& x) { return smooth_char(0, x.inv()); }

SmoothChar operator*(const SmoothChar& a, const SmoothChar& b) {
  return smooth_char(static_cast<long long>(a.c) + b.c, a.v * b.v);
}

SmoothChar inverse(const SmoothChar& a) { return smooth_char(-static_cast<long long>(a.c), a.v.inv()); }

SmoothChar square(const SmoothChar& a) { return a * a; }

SmoothChar lift(const SmoothChar& a, const Embedding& e) { return {a.c, e.up(a.v)}; }

const char* to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

Parity parity_of(const CentralChar& zeta) { return zeta.c % 2 == 0 ? Parity::Even : Parity::Odd; }

CentralChar basic_central_char(const Field& k, Parity parity) {
  return omega_power(k, parity == Parity::Even ? 0 : static_cast<long long>(k.p()) - 2);
}

bool is_basic(const CentralChar& zeta) {
  const Field& k = *zeta.v.field();
  return zeta == basic_central_char(k, parity_of(zeta));
}

BasicReduction reduce_to_basic(const CentralChar& zeta) {
  const Field& k = *zeta.v.field();
  BasicReduction out;
  out.parity = parity_of(zeta);
  const long long r = zeta.c;
  const long long c = out.parity == Parity::Even ? -(r / 2) : -((r + 1) / 2);
  const FieldElement target = zeta.v.inv();
  if (auto s = k.sqrt(target)) {
    out.eta = smooth_char(c, *s);
    return out;
  }
  const QuadraticExtension& ext = k.quadratic_extension();
  auto s = ext.field->sqrt(ext.embedding.up(target));
  out.eta = smooth_char(c, *s);
  out.needs_ext = true;
  return out;
}

BasicReduction basic_twist(const CentralChar& zeta) {
  if (is_basic(zeta)) return {parity_of(zeta), omega_power(*zeta.v.field(), 0), false};
  return reduce_to_basic(zeta);
}

}  // namespace lzeta
