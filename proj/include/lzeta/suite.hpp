#pragma once

// Exhaustive consistency checks over small fields. Each check enumerates every
// relevant point; twisting checks draw characters from a seeded generator.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lzeta/llc.hpp"
#include "lzeta/serialize.hpp"

namespace lzeta {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;  // first few only

  explicit CheckResult(std::string n) : name(std::move(n)) {}

  void fail(const std::string& what);
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok) fail(what);
  }
};

Json to_json(const CheckResult& r);

CheckResult check_field(const FieldPtr& k);
CheckResult check_orbits(int p);
CheckResult check_chain(const EGCurve& curve);
CheckResult check_p5_labels();
CheckResult check_satake(const SatakeSpace& space);
CheckResult check_geometry(const Lmap& map);
CheckResult check_theorem(const Lmap& map, std::vector<TheoremReport>* reports = nullptr);
CheckResult check_parametrization(const Lmap& map);

struct TwistSample {
  CentralChar zeta;  // over the base field
  SmoothChar eta;    // over the quadratic extension
  bool eta_needs_ext = false;
};

// Half of the characters take values outside the base field.
std::vector<TwistSample> twist_samples(const FieldPtr& k, Parity parity, std::uint64_t seed, std::size_t count);

struct TwistChecks {
  CheckResult asph;        // ASph(v . eta) = ASph(v) (x) eta
  CheckResult invariants;  // (pi (x) eta)^{I(1)} = pi^{I(1)} (x) eta
  CheckResult square;      // L_{zeta eta^2}(v . eta) = L_zeta(v) (x) eta
};

TwistChecks check_twisting(const FieldPtr& k, const std::vector<TwistSample>& samples);

}  // namespace lzeta
