#include <doctest.h>

#include "lzeta/hecke.hpp"

using namespace lzeta;

namespace {

const FieldPtr f5 = Field::make(5, 1);
FieldElement e(std::int64_t v) { return f5->element(v); }
const TorusChar chi1{1, 3};

}  // namespace

TEST_SUITE("hecke") {
  TEST_CASE("antispherical modules of Satake points") {
    const SatakeSpace even = build_space(f5, basic_central_char(*f5, Parity::Even));
    const HeckeModuleDesc m = asph(even, crossed_point(even, chi1, e(2), e(0)));
    CHECK(iso_equal(m, RegStd{e(2), e(0), e(1), chi1}));

    const HeckeModuleDesc n2 = asph(even, line_point(even, orbit_of({0, 0}, 5), e(2)));
    CHECK(std::holds_alternative<NonRegStd>(n2));
    CHECK(length(n2) == 1);
    CHECK(is_simple(std::get<NonRegStd>(n2)));

    const HeckeModuleDesc n1 = asph(even, line_point(even, orbit_of({0, 0}, 5), e(1)));
    CHECK(length(n1) == 2);
    CHECK(iso_equal(semisimplify(n1), SSum{{HChar{0, e(1), {0, 0}}, HChar{-1, e(-1), {0, 0}}}}));
  }

  TEST_CASE("twisting modules") {
    const Twist t{1, e(3)};
    const HeckeModuleDesc m = RegStd{e(2), e(0), e(1), chi1};
    CHECK(iso_equal(twist_module(m, t, 5), RegStd{e(1), e(0), e(4), {2, 0}}));
    CHECK(iso_equal(twist_module(m, {0, e(1)}, 5), m));
    CHECK(iso_equal(twist_module(HChar{0, e(2), {0, 0}}, t, 5), HChar{0, e(1), {1, 1}}));
    const HeckeModuleDesc ns = NonRegStd{e(1), e(1), {2, 2}};
    CHECK(iso_equal(twist_module(semisimplify(ns), t, 5), semisimplify(twist_module(ns, t, 5))));
  }

  TEST_CASE("isomorphism of descriptors") {
    const TorusChar chis = swapped(chi1);
    CHECK(iso_equal(RegStd{e(0), e(2), e(1), chis}, RegStd{e(2), e(0), e(1), chi1}));
    CHECK_FALSE(iso_equal(RegStd{e(2), e(0), e(1), chi1}, RegStd{e(3), e(0), e(1), chi1}));
    const SSum a{{HChar{0, e(1), {0, 0}}, HChar{-1, e(-1), {0, 0}}}};
    const SSum b{{HChar{-1, e(-1), {0, 0}}, HChar{0, e(1), {0, 0}}}};
    CHECK(iso_equal(a, b));
    CHECK_FALSE(iso_equal(a, SSum{{HChar{0, e(1), {0, 0}}}}));
    CHECK(iso_equal(RegStd{e(2), e(0), e(1), chi1}, SSum{{RegStd{e(2), e(0), e(1), chi1}}}));
  }

  TEST_CASE("semisimplification") {
    const HeckeModuleDesc triv = NonRegStd{e(1), e(1), {0, 0}};
    CHECK(iso_equal(semisimplify(triv), SSum{{HChar{0, e(1), {0, 0}}, HChar{-1, e(-1), {0, 0}}}}));
    const HeckeModuleDesc reg = RegStd{e(2), e(0), e(1), chi1};
    CHECK(iso_equal(semisimplify(reg), reg));
    const HeckeModuleDesc ns = NonRegStd{e(2), e(1), {0, 0}};
    CHECK(iso_equal(semisimplify(ns), ns));
    CHECK(length(direct_sum({triv, reg, ns})) == 4);
  }

  TEST_CASE("supersingular modules and their invariants") {
    const SimpleDesc ss = RegStd{e(0), e(0), e(4), chi1};
    CHECK(is_supersingular(ss));
    CHECK_FALSE(is_supersingular(SimpleDesc{RegStd{e(1), e(0), e(4), chi1}}));
    CHECK(is_supersingular(SimpleDesc{NonRegStd{e(0), e(1), {2, 2}}}));
    CHECK(component_of(ss, 5) == orbit_of(chi1, 5));
    CHECK(u2_scalar(ss) == e(4));
    CHECK(u2_scalar(SimpleDesc{HChar{-1, e(2), {0, 0}}}) == e(4));
  }
}
