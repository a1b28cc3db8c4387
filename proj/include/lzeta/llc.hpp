#pragma once

// The semisimple mod p local Langlands correspondence for GL_2(Q_p) and the
// comparison of pro-p Iwahori invariants with the antispherical modules along
// the fibers of L_zeta.

#include <string>
#include <variant>
#include <vector>

#include "lzeta/hecke.hpp"
#include "lzeta/lmap.hpp"

namespace lzeta {

// pi(r, x, eta) = Ind(unr(x) (x) w^r unr(1/x)) (x) eta, irreducible, 0 <= r <= p-2.
struct PSConst {
  int r = 0;
  FieldElement x;
  SmoothChar eta;
  friend auto operator<=>(const PSConst&, const PSConst&) = default;
};

// Supersingular pi(r, 0, eta), 0 <= r <= p-1.
struct SSConst {
  int r = 0;
  SmoothChar eta;
  friend auto operator<=>(const SSConst&, const SSConst&) = default;
};

struct CharConst {
  SmoothChar eta;  // eta o det
  friend auto operator<=>(const CharConst&, const CharConst&) = default;
};

struct StConst {
  SmoothChar eta;  // St (x) eta
  friend auto operator<=>(const StConst&, const StConst&) = default;
};

using Constituent = std::variant<PSConst, SSConst, CharConst, StConst>;

struct SmoothGRepDesc {
  std::vector<Constituent> constituents;  // with multiplicity
};

Constituent make_ps(int r, const FieldElement& x, const SmoothChar& eta);
Constituent make_ss(int r, const SmoothChar& eta);
// Constituents of pi(r, x, eta)^ss; splits the reducible cases r = 0, x = +-1.
std::vector<Constituent> ps_semisimplification(int r, const FieldElement& x, const SmoothChar& eta);

SmoothGRepDesc pi_of_rho(const GaloisRepDesc& rho);
HeckeModuleDesc invariants_of(const Constituent& c);
SSum invariants_of(const SmoothGRepDesc& pi);
Constituent twist_constituent(const Constituent& c, const SmoothChar& eta);
CentralChar central_character(const Constituent& c);
const Field& field_of(const Constituent& c);
std::string kind_name(const Constituent& c);

struct BlockDesc {
  int type = 1;
  FieldPtr field;
  std::vector<Constituent> constituents;  // distinct
};

BlockDesc block_of(const EGPoint& x, const EGCurve& curve);

struct TheoremReport {
  EGPoint point;
  std::string case_tag;  // "i", "ii", "iiie", "iiio"
  FieldPtr field;
  std::vector<SatakePoint> fiber;
  bool ramified = false;
  SSum lhs, rhs;
  bool pass = false;
  std::string detail;
};

TheoremReport verify_theorem(const EGPoint& x, const Lmap& map);

struct Parametrization {
  EGPoint point;
  int multiplicity = 1;
  HeckeModuleDesc payload;
};

// c must be irreducible with central character map.space.zeta.
Parametrization parametrize(const Constituent& c, const Lmap& map);

}  // namespace lzeta
