#pragma once

// JSON encodings. Field elements are coefficient lists in the modulus basis.

#include <json.hpp>

#include "lzeta/llc.hpp"

namespace lzeta {

using Json = nlohmann::ordered_json;

Json to_json(const FieldElement& a);
Json to_json(const TorusChar& chi);
Json to_json(const OrbitGamma& gamma);
Json to_json(const SmoothChar& chi);
Json to_json(const SerreWeight& w);
Json to_json(const SatakeSpace& space);
Json to_json(const SatakeSpace& space, const SatakePoint& v);
Json to_json(const HeckeModuleDesc& m);
Json to_json(const SimpleDesc& m);
Json to_json(const EGCurve& curve);
Json to_json(const EGCurve& curve, const EGPoint& x);
Json to_json(const GaloisRepDesc& rho);
Json to_json(const Constituent& c);
Json to_json(const Lmap& map);
Json to_json(const TheoremReport& report, const Lmap& map);

std::string to_dot(const EGCurve& curve);

}  // namespace lzeta
