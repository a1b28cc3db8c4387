#include <doctest.h>

#include <algorithm>
#include <set>

#include "lzeta/error.hpp"
#include "lzeta/gf.hpp"

using namespace lzeta;

namespace {

// First monic irreducible quadratic X^2 + c1 X + c0, ordered by (c1, c0):
// irreducible exactly when it has no root in F_p.
std::vector<std::uint32_t> oracle_quadratic_modulus(std::uint32_t p) {
  for (std::uint32_t c1 = 0; c1 < p; ++c1)
    for (std::uint32_t c0 = 0; c0 < p; ++c0) {
      bool root = false;
      for (std::uint32_t y = 0; y < p && !root; ++y) root = (y * y + c1 * y + c0) % p == 0;
      if (!root) return {c0, c1, 1};
    }
  return {};
}

}  // namespace

TEST_SUITE("gf") {
  TEST_CASE("prime field arithmetic") {
    const FieldPtr f5 = Field::make(5, 1);
    CHECK(f5->modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK((f5->element(2) * f5->element(3)).is_one());
    CHECK(f5->element(2).inv() == f5->element(3));
    CHECK(f5->element(-1) == f5->element(4));
    CHECK(f5->element(2).pow(4).is_one());
    CHECK(f5->element(2).pow(-1) == f5->element(3));
    CHECK_THROWS_AS(f5->zero().inv(), Error);
  }

  TEST_CASE("unsupported primes") {
    for (std::uint32_t p : {2u, 3u, 4u, 9u, 15u}) {
      try {
        Field::make(p, 1);
        FAIL("expected an error for p = " << p);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedPrime);
      }
    }
  }

  TEST_CASE("quadratic moduli") {
    const FieldPtr f25 = Field::make(5, 2);
    CHECK(f25->modulus() == std::vector<std::uint32_t>{2, 0, 1});
    const FieldElement x = f25->generator();
    CHECK(x * x == f25->element(3));
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) CHECK(Field::make(p, 2)->modulus() == oracle_quadratic_modulus(p));
  }

  TEST_CASE("fields are shared per (p, n)") {
    CHECK(Field::make(7, 2).get() == Field::make(7, 2).get());
    CHECK(Field::make(7, 1)->quadratic_extension().field.get() == Field::make(7, 2).get());
  }

  TEST_CASE("units and enumeration order") {
    const FieldPtr f5 = Field::make(5, 1);
    std::vector<std::string> units;
    for (const auto& u : f5->units()) units.push_back(f5->format(u));
    CHECK(units == std::vector<std::string>{"1", "2", "3", "4"});
    CHECK(Field::make(5, 2)->units().size() == 24);
    CHECK(Field::make(7, 1)->units().size() == 6);

    const FieldPtr f49 = Field::make(7, 2);
    const auto all = f49->elements();
    CHECK(all.size() == 49);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::set<FieldElement>(all.begin(), all.end()).size() == 49);
    CHECK(f49->format(f49->element_at(8)) == "[1,1]");
  }

  TEST_CASE("field axioms on F_49 and F_125") {
    for (auto [p, n] : {std::pair{7u, 2u}, std::pair{5u, 3u}}) {
      const FieldPtr k = Field::make(p, n);
      const auto all = k->elements();
      for (std::size_t i = 0; i < all.size(); i += 3)
        for (std::size_t j = 0; j < all.size(); j += 5) {
          const auto &a = all[i], &b = all[j];
          CHECK((a + b) - b == a);
          CHECK(a * b == b * a);
          if (!b.is_zero()) CHECK((a / b) * b == a);
        }
      for (const auto& a : k->units()) CHECK(a.pow(static_cast<std::int64_t>(k->order()) - 1).is_one());
    }
  }

  TEST_CASE("solve_quadratic against exhaustive search") {
    const FieldPtr f5 = Field::make(5, 1);
    auto r = f5->solve_quadratic(f5->element(-2), f5->one());
    CHECK(r.roots == std::vector<FieldElement>{f5->one()});
    CHECK(r.double_root);
    CHECK(f5->solve_quadratic(f5->element(-1), f5->one()).roots.empty());

    const FieldPtr f25 = Field::make(5, 2);
    r = f25->solve_quadratic(f25->element(-1), f25->one());
    REQUIRE(r.roots.size() == 2);
    CHECK((r.roots[0] * r.roots[1]).is_one());

    for (const auto& b : f25->elements())
      for (const auto& c : f25->elements()) {
        std::vector<FieldElement> want;
        for (const auto& y : f25->elements())
          if ((y * y + b * y + c).is_zero()) want.push_back(y);
        const auto got = f25->solve_quadratic(b, c);
        CHECK(got.roots == want);
        CHECK(got.double_root == (b * b == f25->element(4) * c));
      }
  }

  TEST_CASE("square roots") {
    for (auto [p, n] : {std::pair{5u, 1u}, std::pair{13u, 1u}, std::pair{5u, 2u}, std::pair{7u, 3u}}) {
      const FieldPtr k = Field::make(p, n);
      std::set<FieldElement> squares;
      for (const auto& a : k->elements()) squares.insert(a * a);
      for (const auto& a : k->elements()) {
        const auto s = k->sqrt(a);
        CHECK(s.has_value() == squares.count(a) > 0);
        CHECK(k->is_square(a) == s.has_value());
        if (s) {
          CHECK(*s * *s == a);
          CHECK(*s <= -*s);
        }
      }
    }
  }

  TEST_CASE("embedding into the quadratic extension") {
    for (auto [p, n] : {std::pair{5u, 1u}, std::pair{5u, 2u}, std::pair{7u, 2u}}) {
      const FieldPtr k = Field::make(p, n);
      const QuadraticExtension& ext = k->quadratic_extension();
      CHECK(ext.field->degree() == 2 * n);
      std::set<FieldElement> image;
      for (const auto& a : k->elements()) {
        const FieldElement u = ext.embedding.up(a);
        image.insert(u);
        CHECK(ext.embedding.down(u) == a);
        CHECK(ext.field->in_subfield(u, n));
        for (const auto& b : {k->generator(), k->element(3)}) {
          CHECK(ext.embedding.up(a * b) == u * ext.embedding.up(b));
          CHECK(ext.embedding.up(a + b) == u + ext.embedding.up(b));
        }
      }
      CHECK(image.size() == k->order());
      for (const auto& b : ext.field->elements()) {
        // The image of K is the fixed field of the q-power map.
        const bool fixed = b.pow(static_cast<std::int64_t>(k->order())) == b;
        CHECK(ext.embedding.down(b).has_value() == fixed);
      }
    }
  }

  TEST_CASE("size limits") {
    CHECK_THROWS_AS(Field::make(5, 9), Error);
    CHECK_NOTHROW(Field::make(13, 4));
  }
}
