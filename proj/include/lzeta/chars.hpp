#pragma once

// Characters of the diagonal torus T(F_q) = (F_q^x)^2, their Weyl orbits, and
// smooth characters Q_p^x -> F^x recorded as (exponent of omega, value at p^{-1}).

#include <compare>
#include <vector>

#include "lzeta/gf.hpp"

namespace lzeta {

int mod(long long a, int m);

struct TorusChar {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const TorusChar&, const TorusChar&) = default;
};

TorusChar make_torus_char(long long a, long long b, int q);
TorusChar swapped(const TorusChar& chi);
TorusChar twist_char(const TorusChar& chi, int r, int q);

struct OrbitGamma {
  TorusChar rep;  // a <= b
  bool regular = false;
  friend auto operator<=>(const OrbitGamma&, const OrbitGamma&) = default;
};

OrbitGamma orbit_of(const TorusChar& chi, int q);
OrbitGamma twist_orbit(const OrbitGamma& gamma, int r, int q);
int restrict_to_center(const OrbitGamma& gamma, int q);
std::vector<OrbitGamma> fiber_of_restriction(int q, int e);
std::vector<OrbitGamma> all_orbits(int q);

struct SmoothChar {
  int c = 0;       // omega^c on Z_p^x, c mod p-1
  FieldElement v;  // value at p^{-1}
  friend bool operator==(const SmoothChar&, const SmoothChar&) = default;
  friend auto operator<=>(const SmoothChar&, const SmoothChar&) = default;
};
using CentralChar = SmoothChar;

SmoothChar smooth_char(long long c, const FieldElement& v);
SmoothChar omega_power(const Field& k, long long e);
SmoothChar unr(const FieldElement& x);  // p -> x
SmoothChar operator*(const SmoothChar& a, const SmoothChar& b);
SmoothChar inverse(const SmoothChar& a);
SmoothChar square(const SmoothChar& a);
SmoothChar lift(const SmoothChar& a, const Embedding& e);

enum class Parity { Even, Odd };

const char* to_string(Parity parity);
Parity parity_of(const CentralChar& zeta);
CentralChar basic_central_char(const Field& k, Parity parity);
bool is_basic(const CentralChar& zeta);

struct BasicReduction {
  Parity parity = Parity::Even;
  SmoothChar eta;          // zeta * eta^2 is basic
  bool needs_ext = false;  // eta.v lives in the quadratic extension
};

BasicReduction reduce_to_basic(const CentralChar& zeta);
// As reduce_to_basic, but the trivial character when zeta is already basic.
BasicReduction basic_twist(const CentralChar& zeta);

}  // namespace lzeta
