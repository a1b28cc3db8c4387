#include <doctest.h>

#include <map>

#include "lzeta/error.hpp"
#include "lzeta/lmap.hpp"

using namespace lzeta;

namespace {

Lmap basic_map(const FieldPtr& k, Parity parity) {
  return build_map(build_space(k, basic_central_char(*k, parity)), build_curve(k, parity));
}

}  // namespace

TEST_SUITE("lmap") {
  TEST_CASE("even map at p = 5") {
    const FieldPtr f5 = Field::make(5, 1);
    const Lmap map = basic_map(f5, Parity::Even);
    for (std::int64_t c = 1; c < 5; ++c) {
      const EGPoint x = eval(line_point(map.space, orbit_of({0, 0}, 5), f5->element(c)), map);
      CHECK(x == red_point(map.curve, 0, f5->element(c)));
    }
    const EGPoint origin = eval(crossed_point(map.space, {1, 3}, f5->zero(), f5->zero()), map);
    CHECK(origin == node_point(map.curve, 1));
    const FiberResult f = fiber(origin, map);
    CHECK(f.points.size() == 1);
    CHECK(f.points[0].is_origin());
    CHECK_FALSE(f.ramified);
  }

  TEST_CASE("odd map at p = 5") {
    const FieldPtr f5 = Field::make(5, 1);
    const Lmap map = basic_map(f5, Parity::Odd);
    const TorusChar chi1{0, 3};  // w^0 (x) w^{-1}
    const EGPoint t0 = eval(crossed_point(map.space, chi1, f5->zero(), f5->element(2)), map);
    CHECK(t0 == red_point(map.curve, 0, f5->zero()));
    const EGPoint t2 = eval(crossed_point(map.space, chi1, f5->zero(), f5->one()), map);
    CHECK(t2 == red_point(map.curve, 0, f5->element(2)));
    CHECK(t2.exceptional);
    CHECK(eval(crossed_point(map.space, chi1, f5->zero(), f5->zero()), map) == node_point(map.curve, 0));

    const FiberResult f2 = fiber(t2, map);
    CHECK(f2.ramified);
    REQUIRE(f2.points.size() == 1);
    CHECK(f2.points[0] == crossed_point(map.space, chi1, f5->zero(), f5->one()));

    // y^2 - y + 1 has no root in F_5, so the fiber over t = 1 lives over F_25.
    const FiberResult f1 = fiber(red_point(map.curve, 0, f5->one()), map);
    CHECK(f1.extension);
    REQUIRE(f1.points.size() == 2);
    const auto& a = std::get<CrossedCoords>(f1.points[0].coords);
    const auto& b = std::get<CrossedCoords>(f1.points[1].coords);
    CHECK(a.x.is_zero());
    CHECK((a.y * b.y).is_one());
    CHECK(a.y + b.y == f1.field->one());
  }

  TEST_CASE("exhaustive image counts over the quadratic extension") {
    for (std::uint32_t p : {5u, 7u})
      for (Parity parity : {Parity::Even, Parity::Odd}) {
        const FieldPtr k = Field::make(p, 1);
        const Lmap big = lift(basic_map(k, parity), k->quadratic_extension().embedding);
        std::map<EGPoint, int> hits;
        for (const auto& v : enumerate_points(big.space)) ++hits[eval(v, big)];
        for (const auto& x : enumerate_points(big.curve)) {
          const FiberResult f = fiber(x, big);
          const auto it = hits.find(x);
          if (it == hits.end()) {
            // Only t-values whose roots need a further extension are missed.
            CHECK(parity == Parity::Odd);
            CHECK(f.extension);
            continue;
          }
          CHECK(it->second <= 2);
          CHECK_FALSE(f.extension);
          CHECK(f.points.size() == static_cast<std::size_t>(it->second));
          CHECK(f.ramified == (parity == Parity::Odd && x.exceptional));
        }
      }
  }

  TEST_CASE("piece shapes and geometry report") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
      const FieldPtr k = Field::make(p, 1);
      const Lmap even = basic_map(k, Parity::Even);
      std::size_t covers = 0;
      for (const auto& d : even.pieces)
        for (const auto& piece : d.pieces) covers += piece.kind == PieceKind::QuadraticCover ? 1 : 0;
      CHECK(covers == 0);
      const Lmap odd = basic_map(k, Parity::Odd);
      covers = 0;
      for (const auto& d : odd.pieces)
        for (const auto& piece : d.pieces) {
          if (piece.kind != PieceKind::QuadraticCover) continue;
          ++covers;
          CHECK(std::string(piece.formula()) == "y-plus-inverse");
          CHECK(odd.curve.components[piece.target_component].chart == ChartKind::Trace);
        }
      CHECK(covers == 2);
      const GeometryReport g = verify_geometry(even);
      CHECK(g.pass);
      CHECK(verify_geometry(odd).pass);
    }
  }

  TEST_CASE("twisted central characters") {
    const FieldPtr f7 = Field::make(7, 1);
    const CentralChar zeta = smooth_char(3, f7->element(2));
    const Lmap map = build_map(build_space(f7, zeta), build_curve(f7, zeta));
    CHECK(verify_geometry(map).pass);
    CHECK_THROWS_AS(build_map(build_space(f7, zeta), build_curve(f7, Parity::Even)), Error);
  }
}
