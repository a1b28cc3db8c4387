#include <doctest.h>

#include <map>

#include "lzeta/error.hpp"
#include "lzeta/llc.hpp"

using namespace lzeta;

namespace {

Lmap basic_map(const FieldPtr& k, Parity parity) {
  return build_map(build_space(k, basic_central_char(*k, parity)), build_curve(k, parity));
}

bool holds_kinds(const std::vector<Constituent>& cs, std::vector<std::string> kinds) {
  std::vector<std::string> got;
  for (const auto& c : cs) got.push_back(kind_name(c));
  std::sort(got.begin(), got.end());
  std::sort(kinds.begin(), kinds.end());
  return got == kinds;
}

}  // namespace

TEST_SUITE("llc") {
  TEST_CASE("principal series and their invariants") {
    const FieldPtr f7 = Field::make(7, 1);
    const SmoothChar one = omega_power(*f7, 0);
    CHECK(holds_kinds(ps_semisimplification(0, f7->one(), one), {"char", "st"}));
    CHECK(holds_kinds(ps_semisimplification(0, f7->element(-1), one), {"char", "st"}));
    CHECK(holds_kinds(ps_semisimplification(0, f7->element(3), one), {"ps"}));
    CHECK_THROWS_AS(make_ps(0, f7->one(), one), Error);

    // pi(2k, x, w^{-k}) has invariants M(x, 0, 1, chi_k) with chi_k = w^k (x) w^{-k}.
    for (int k = 1; k <= 2; ++k)
      for (std::int64_t x = 1; x < 7; ++x) {
        const Constituent c = make_ps(2 * k, f7->element(x), omega_power(*f7, -k));
        CHECK(iso_equal(invariants_of(c), RegStd{f7->element(x), f7->zero(), f7->one(), make_torus_char(k, -k, 7)}));
      }
    // pi(0, z1, eta) with eta = w^k has invariants M(z1, 1, chi) on the line of w^k (x) w^k.
    const Constituent c = make_ps(0, f7->element(3), omega_power(*f7, 2));
    CHECK(iso_equal(invariants_of(c), NonRegStd{f7->element(3), f7->one(), {2, 2}}));

    CHECK(iso_equal(invariants_of(Constituent{CharConst{one}}), HChar{0, f7->one(), {0, 0}}));
    CHECK(iso_equal(invariants_of(Constituent{StConst{one}}), HChar{-1, f7->element(-1), {0, 0}}));
  }

  TEST_CASE("normal forms") {
    const FieldPtr f7 = Field::make(7, 1);
    const SmoothChar eta = smooth_char(1, f7->element(3));
    CHECK(make_ps(2, f7->element(2), eta) == make_ps(2, f7->element(-2), smooth_char(1, f7->element(-3))));
    CHECK(make_ss(1, eta) == make_ss(5, eta * omega_power(*f7, 1)));
    CHECK(make_ss(1, eta) == make_ss(1, smooth_char(1, f7->element(-3))));
  }

  TEST_CASE("pi of a generic reducible representation") {
    const FieldPtr f7 = Field::make(7, 1);
    const EGCurve curve = build_curve(f7, Parity::Even);
    for (std::int64_t x = 2; x < 6; ++x) {
      const EGPoint pt = red_point(curve, 1, f7->element(x));
      const SmoothGRepDesc pi = pi_of_rho(rep_of_point(pt, curve).rep);
      CHECK(holds_kinds(pi.constituents, {"ps", "ps"}));
      for (const auto& c : pi.constituents) CHECK(central_character(c) == curve.zeta);
    }
  }

  TEST_CASE("blocks") {
    const FieldPtr f5 = Field::make(5, 1);
    const EGCurve even = build_curve(f5, Parity::Even);
    const BlockDesc node = block_of(node_point(even, 1), even);
    CHECK(node.type == 1);
    CHECK(holds_kinds(node.constituents, {"ss"}));
    const BlockDesc exc = block_of(red_point(even, 0, f5->one()), even);
    CHECK(exc.type == 3);
    CHECK(holds_kinds(exc.constituents, {"char", "st", "ps"}));
    const EGCurve odd = build_curve(f5, Parity::Odd);
    const BlockDesc oexc = block_of(red_point(odd, 0, f5->element(2)), odd);
    CHECK(oexc.type == 3);
    CHECK(holds_kinds(oexc.constituents, {"ps"}));
    CHECK(block_of(red_point(odd, 1, f5->element(2)), odd).type == 2);
  }

  TEST_CASE("the theorem at every point") {
    for (std::uint32_t p : {5u, 7u})
      for (unsigned n : {1u, 2u})
        for (Parity parity : {Parity::Even, Parity::Odd}) {
          const FieldPtr k = Field::make(p, n);
          const Lmap map = basic_map(k, parity);
          std::map<std::string, int> cases;
          for (const auto& x : enumerate_points(map.curve)) {
            const TheoremReport r = verify_theorem(x, map);
            CHECK_MESSAGE(r.pass, r.detail);
            ++cases[r.case_tag];
          }
          CHECK(cases["i"] == static_cast<int>(map.curve.nodes.size()));
          CHECK(cases[parity == Parity::Even ? "iiie" : "iiio"] == 4);
        }
  }

  TEST_CASE("odd exceptional point has a doubled fiber") {
    const FieldPtr f5 = Field::make(5, 1);
    const Lmap map = basic_map(f5, Parity::Odd);
    const TheoremReport r = verify_theorem(red_point(map.curve, 0, f5->element(2)), map);
    CHECK(r.case_tag == "iiio");
    CHECK(r.ramified);
    CHECK(r.lhs.members.size() == 2);
  }

  TEST_CASE("parametrization") {
    const FieldPtr f5 = Field::make(5, 1);
    for (Parity parity : {Parity::Even, Parity::Odd}) {
      const Lmap map = basic_map(f5, parity);
      for (const auto& x : enumerate_points(map.curve))
        for (const auto& c : block_of(x, map.curve).constituents) {
          const Parametrization par = parametrize(c, map);
          CHECK(par.point == x);
          CHECK(par.multiplicity == (parity == Parity::Odd && x.exceptional ? 2 : 1));
        }
    }
    const Lmap even = basic_map(f5, Parity::Even);
    const Parametrization st = parametrize(StConst{omega_power(*f5, 0)}, even);
    CHECK(st.point.exceptional);
    CHECK(std::get<HChar>(st.payload).eps == -1);
    CHECK_THROWS_AS(parametrize(StConst{omega_power(*f5, 1)}, even), Error);
  }
}
