#include <doctest.h>

#include <set>

#include "lzeta/error.hpp"
#include "lzeta/satake.hpp"

using namespace lzeta;

namespace {

std::size_t count_crossed_lines(const Field& k) {
  std::size_t n = 0;
  for (const auto& x : k.elements())
    for (const auto& y : k.elements()) n += (x * y).is_zero() ? 1 : 0;
  return n;
}

std::vector<std::pair<ComponentShape, TorusChar>> layout(const SatakeSpace& s) {
  std::vector<std::pair<ComponentShape, TorusChar>> out;
  for (const auto& c : s.components) out.push_back({c.shape, c.gamma.rep});
  return out;
}

}  // namespace

TEST_SUITE("satake") {
  TEST_CASE("component layout at p = 5 and p = 7") {
    const FieldPtr f5 = Field::make(5, 1);
    using S = ComponentShape;
    const SatakeSpace even = build_space(f5, basic_central_char(*f5, Parity::Even));
    CHECK(layout(even) == std::vector<std::pair<S, TorusChar>>{
                              {S::Line, {0, 0}}, {S::Line, {2, 2}}, {S::CrossedLines, {1, 3}}});
    const SatakeSpace odd = build_space(f5, basic_central_char(*f5, Parity::Odd));
    CHECK(layout(odd) ==
          std::vector<std::pair<S, TorusChar>>{{S::CrossedLines, {0, 3}}, {S::CrossedLines, {1, 2}}});

    const FieldPtr f7 = Field::make(7, 1);
    const SatakeSpace e7 = build_space(f7, basic_central_char(*f7, Parity::Even));
    std::size_t lines = 0, crossed = 0;
    for (const auto& c : e7.components) (c.shape == S::Line ? lines : crossed) += 1;
    CHECK(lines == 2);
    CHECK(crossed == 2);
  }

  TEST_CASE("basic orderings follow the chain characters") {
    // Even: chi_k = w^k (x) w^{-k}; odd: chi_k = w^{k-1} (x) w^{-k}.
    const FieldPtr f11 = Field::make(11, 1);
    const SatakeSpace even = build_space(f11, basic_central_char(*f11, Parity::Even));
    std::set<TorusChar> firsts;
    for (const auto& c : even.components)
      if (c.gamma.regular) firsts.insert(c.first);
    std::set<TorusChar> want;
    for (int k = 1; k <= 4; ++k) want.insert(make_torus_char(k, -k, 11));
    CHECK(firsts == want);

    const SatakeSpace odd = build_space(f11, basic_central_char(*f11, Parity::Odd));
    firsts.clear();
    want.clear();
    for (const auto& c : odd.components) firsts.insert(c.first);
    for (int k = 1; k <= 5; ++k) want.insert(make_torus_char(k - 1, -k, 11));
    CHECK(firsts == want);
  }

  TEST_CASE("point counts") {
    for (auto [p, n] : {std::pair{5u, 1u}, std::pair{7u, 1u}, std::pair{5u, 2u}}) {
      const FieldPtr k = Field::make(p, n);
      const std::size_t crossed = count_crossed_lines(*k);
      for (Parity parity : {Parity::Even, Parity::Odd}) {
        const SatakeSpace s = build_space(k, basic_central_char(*k, parity));
        std::size_t want = 0;
        for (const auto& c : s.components) want += c.gamma.regular ? crossed : k->order();
        const auto pts = enumerate_points(s);
        CHECK(pts.size() == want);
        CHECK(std::set<SatakePoint>(pts.begin(), pts.end()).size() == pts.size());
      }
    }
    const FieldPtr f5 = Field::make(5, 1);
    CHECK(enumerate_points(build_space(f5, basic_central_char(*f5, Parity::Even))).size() == 19);
    CHECK(enumerate_points(build_space(f5, basic_central_char(*f5, Parity::Odd))).size() == 18);
    const FieldPtr f25 = Field::make(5, 2);
    const SatakeSpace s25 = build_space(f25, basic_central_char(*f25, Parity::Even));
    std::size_t on_first = 0;
    for (const auto& v : enumerate_points(s25)) on_first += v.component == 0 ? 1 : 0;
    CHECK(on_first == 25);
  }

  TEST_CASE("twisting points") {
    const FieldPtr f5 = Field::make(5, 1);
    const CentralChar zeta = basic_central_char(*f5, Parity::Even);
    const SatakeSpace src = build_space(f5, zeta);
    const SatakeSpace same = build_space(f5, twisted_central_char(zeta, {0, f5->one()}));
    for (const auto& v : enumerate_points(src)) CHECK(twist_point(src, v, {0, f5->one()}, same) == v);

    const Twist t{0, f5->element(3)};
    const SatakeSpace dst = build_space(f5, twisted_central_char(zeta, t));
    CHECK(dst.zeta.v == f5->element(4));
    const SatakePoint v = crossed_point(src, {1, 3}, f5->element(2), f5->zero());
    const SatakePoint w = twist_point(src, v, t, dst);
    const auto& c = std::get<CrossedCoords>(w.coords);
    CHECK(dst.components[w.component].first == TorusChar{1, 3});
    CHECK(c.x == f5->one());
    CHECK(c.y.is_zero());
    CHECK(dst.components[w.component].z2 == f5->element(4) * src.components[v.component].z2);

    CHECK_THROWS_AS(twist_point(src, v, t, src), Error);
  }

  TEST_CASE("theta") {
    for (Parity parity : {Parity::Even, Parity::Odd}) {
      const FieldPtr f25 = Field::make(5, 2);
      const SatakeSpace s = build_space(f25, basic_central_char(*f25, parity));
      for (const auto& v : enumerate_points(s)) CHECK(theta(s, v) == s.zeta);
    }
    const FieldPtr f5 = Field::make(5, 1);
    const SatakeSpace odd = build_space(f5, basic_central_char(*f5, Parity::Odd));
    const SatakePoint v = crossed_point(odd, {1, 2}, f5->element(4), f5->zero());
    CHECK(theta(odd, v) == smooth_char(3, f5->one()));
  }

  TEST_CASE("crossed points may be given in either ordering") {
    const FieldPtr f7 = Field::make(7, 1);
    const SatakeSpace s = build_space(f7, basic_central_char(*f7, Parity::Even));
    const SatakePoint a = crossed_point(s, {1, 5}, f7->element(3), f7->zero());
    const SatakePoint b = crossed_point(s, {5, 1}, f7->zero(), f7->element(3));
    CHECK(a == b);
    CHECK_THROWS_AS(crossed_point(s, {1, 5}, f7->one(), f7->one()), Error);
  }
}
