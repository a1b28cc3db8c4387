#include <doctest.h>

#include <set>

#include "lzeta/egcurve.hpp"
#include "lzeta/error.hpp"

using namespace lzeta;

namespace {

std::vector<std::string> labels(const EGCurve& c) {
  std::vector<std::string> out;
  for (const auto& comp : c.components) out.push_back(to_string(comp.left) + " | " + to_string(comp.right));
  return out;
}

std::size_t count_if_nodes(const EGCurve& c, bool smooth) {
  std::size_t n = 0;
  for (const auto& node : c.nodes) n += node.smooth == smooth ? 1 : 0;
  return n;
}

}  // namespace

TEST_SUITE("egcurve") {
  TEST_CASE("chain at p = 5") {
    const FieldPtr f5 = Field::make(5, 1);
    const EGCurve even = build_curve(f5, Parity::Even);
    CHECK(labels(even) == std::vector<std::string>{"Sym^0 | Sym^2 det^1", "Sym^2 det^3 | Sym^0 det^2"});
    CHECK(count_if_nodes(even, false) == 1);
    CHECK(count_if_nodes(even, true) == 2);
    const auto [w1, w2] = node_weights(even, 1);
    CHECK(std::set<SerreWeight>{w1, w2} == std::set<SerreWeight>{{2, 3}, {2, 1}});
    CHECK(exceptional_points(even).size() == 4);

    const EGCurve odd = build_curve(f5, Parity::Odd);
    CHECK(labels(odd) == std::vector<std::string>{"Sym^3 | \"Sym^-1\"", "Sym^1 det^1 | Sym^1 det^3",
                                                  "\"Sym^-1\" det^2 | Sym^3 det^2"});
    CHECK(count_if_nodes(odd, false) == 2);
    CHECK(count_if_nodes(odd, true) == 0);
  }

  TEST_CASE("chain at p = 7") {
    const FieldPtr f7 = Field::make(7, 1);
    const EGCurve even = build_curve(f7, Parity::Even);
    CHECK(labels(even) == std::vector<std::string>{"Sym^0 | Sym^4 det^1", "Sym^2 det^5 | Sym^2 det^2",
                                                   "Sym^4 det^4 | Sym^0 det^3"});
    CHECK(even.nodes.size() == 4);
    CHECK(count_if_nodes(even, false) == 2);
    const EGCurve odd = build_curve(f7, Parity::Odd);
    CHECK(labels(odd) == std::vector<std::string>{"Sym^5 | \"Sym^-1\"", "Sym^3 det^1 | Sym^1 det^5",
                                                  "Sym^1 det^2 | Sym^3 det^4", "\"Sym^-1\" det^3 | Sym^5 det^3"});
    CHECK(odd.nodes.size() == 3);
  }

  TEST_CASE("point counts and exceptional points") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
      const FieldPtr k = Field::make(p, 1);
      const EGCurve even = build_curve(k, Parity::Even);
      const EGCurve odd = build_curve(k, Parity::Odd);
      // p - 1 reducible points on a component between two irreducible points, p on a t-line.
      const std::size_t m = (p - 1) / 2;
      CHECK(enumerate_points(even).size() == (m + 1) + m * (p - 1));
      CHECK(enumerate_points(odd).size() == m + 2 * p + (m - 1) * (p - 1));
      std::size_t flagged = 0;
      for (const auto& x : enumerate_points(even)) flagged += x.exceptional ? 1 : 0;
      CHECK(flagged == 4);
      flagged = 0;
      for (const auto& x : enumerate_points(odd)) flagged += x.exceptional ? 1 : 0;
      CHECK(flagged == 4);
    }
  }

  TEST_CASE("representations at points") {
    const FieldPtr f5 = Field::make(5, 1);
    const EGCurve even = build_curve(f5, Parity::Even);
    const RepOfPoint r = rep_of_point(red_point(even, 0, f5->element(2)), even);
    CHECK_FALSE(r.extension);
    CHECK(r.rep == make_reducible(unr(f5->element(2)) * omega_power(*f5, 1), unr(f5->element(3))));

    const EGCurve odd = build_curve(f5, Parity::Odd);
    const RepOfPoint t1 = rep_of_point(red_point(odd, 0, f5->one()), odd);
    CHECK(t1.extension);
    const auto& pair = std::get<ReducibleRep>(t1.rep);
    // Frobenius (5th power) swaps the two characters.
    CHECK(pair.first.v.pow(5) == pair.second.v);
    CHECK(pair.first.v * pair.second.v == t1.field->one());
    CHECK(pair.first.v + pair.second.v == t1.field->one());
  }

  TEST_CASE("determinant and round trip over general central characters") {
    for (std::uint32_t p : {5u, 7u}) {
      const FieldPtr k = Field::make(p, 2);
      for (int c = 0; c < static_cast<int>(p) - 1; ++c)
        for (const auto& v : {k->one(), k->generator() * k->generator()}) {
          const CentralChar zeta = smooth_char(c, v);
          const EGCurve curve = build_curve(k, zeta);
          for (const auto& x : enumerate_points(curve)) {
            const RepOfPoint rho = rep_of_point(x, curve);
            CentralChar want = omega_power(*k, 1) * zeta;
            if (rho.extension) want = lift(want, k->quadratic_extension().embedding);
            CHECK(determinant(rho.rep) == want);
            CHECK(point_of_rep(rho.rep, curve) == x);
          }
        }
    }
  }

  TEST_CASE("twisting the curve") {
    const FieldPtr f7 = Field::make(7, 1);
    const EGCurve src = build_curve(f7, Parity::Odd);
    const SmoothChar eta = smooth_char(2, f7->element(3));
    const CentralChar zeta2 = src.zeta * square(eta);
    const EGCurve dst = build_curve(f7, zeta2);
    const SmoothChar trivial = omega_power(*f7, 0);
    for (const auto& x : enumerate_points(src)) {
      CHECK(twist_curve(x, trivial, src, src) == x);
      const EGPoint y = twist_curve(x, eta, src, dst);
      CHECK(y.exceptional == x.exceptional);
      CHECK(twist_curve(y, inverse(eta), dst, src) == x);
    }
  }

  TEST_CASE("invalid points") {
    const FieldPtr f5 = Field::make(5, 1);
    const EGCurve even = build_curve(f5, Parity::Even);
    CHECK_THROWS_AS(node_point(even, 3), Error);
    CHECK_THROWS_AS(red_point(even, 0, f5->zero()), Error);
    CHECK_THROWS_AS(build_curve(f5, smooth_char(0, f5->element(2))), Error);
  }
}
