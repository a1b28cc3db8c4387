#pragma once

// Text names for points and central characters, as used on the command line.
//
//   curve:  node-<k> | ext-left:z1=<v> | ext-right:z1=<v> | ext-left:t=<v>
//           | ext-right:t=<v> | int-<k>:x=<v>
//   satake: comp-<i>:x=<v> | comp-<i>:y=<v> | comp-<i>:z1=<v>
//   zeta:   basic-even | basic-odd | <c>:<v>
//
// A value <v> is an integer or a coefficient list such as [1,2].

#include <string>
#include <string_view>

#include "lzeta/egcurve.hpp"
#include "lzeta/satake.hpp"

namespace lzeta {

FieldElement parse_value(const Field& k, std::string_view text);
CentralChar parse_zeta(const Field& k, std::string_view text);

EGPoint parse_curve_point(const EGCurve& curve, std::string_view text);
SatakePoint parse_satake_point(const SatakeSpace& space, std::string_view text);

std::string point_name(const EGCurve& curve, const EGPoint& x);
std::string point_name(const SatakeSpace& space, const SatakePoint& v);

}  // namespace lzeta
