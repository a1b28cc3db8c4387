#pragma once

// Finite-dimensional modules over the pro-p Iwahori Hecke algebra, described by
// their standard-module parameters.

#include <variant>
#include <vector>

#include "lzeta/satake.hpp"

namespace lzeta {

// Standard module M(x, y, z2, chi) on a regular component.
struct RegStd {
  FieldElement x, y, z2;
  TorusChar chi;
  friend auto operator<=>(const RegStd&, const RegStd&) = default;
};

// Standard module M(z1, z2, chi) on a non-regular component; simple iff z1^2 != z2.
struct NonRegStd {
  FieldElement z1, z2;
  TorusChar chi;
  friend auto operator<=>(const NonRegStd&, const NonRegStd&) = default;
};

// The characters (0, z1) and (-1, -z1): eps = 0 or -1, c the scalar by which U acts.
struct HChar {
  int eps = 0;
  FieldElement c;
  TorusChar chi;
  friend auto operator<=>(const HChar&, const HChar&) = default;
};

using SimpleDesc = std::variant<RegStd, NonRegStd, HChar>;

struct SSum {
  std::vector<SimpleDesc> members;
};

using HeckeModuleDesc = std::variant<RegStd, NonRegStd, HChar, SSum>;

HeckeModuleDesc asph(const SatakeSpace& space, const SatakePoint& v);
HeckeModuleDesc twist_module(const HeckeModuleDesc& m, const Twist& t, int q);
SSum semisimplify(const HeckeModuleDesc& m);
SSum direct_sum(const std::vector<HeckeModuleDesc>& parts);
bool iso_equal(const HeckeModuleDesc& a, const HeckeModuleDesc& b);
std::size_t length(const HeckeModuleDesc& m);

SimpleDesc normalize(const SimpleDesc& m);
bool is_simple(const SimpleDesc& m);
bool is_supersingular(const SimpleDesc& m);
OrbitGamma component_of(const SimpleDesc& m, int q);
FieldElement u2_scalar(const SimpleDesc& m);

}  // namespace lzeta
