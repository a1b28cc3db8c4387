#pragma once

// Finite fields F_{p^n} in a polynomial basis.
//
// A Field is immutable and shared; elements keep a raw pointer back to the
// field that produced them, so the owning FieldPtr must outlive them.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lzeta {

class Field;
class Embedding;
struct QuadraticExtension;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr unsigned kMaxDegree = 8;

class FieldElement {
 public:
  FieldElement() = default;

  const Field* field() const { return field_; }
  std::span<const std::uint32_t> coeffs() const;
  bool is_zero() const;
  bool is_one() const;

  // Equality is coefficientwise; comparing elements of different fields is a bug.
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }
  // Enumeration order: the coefficient of the highest power is most significant.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement inv() const;
  FieldElement pow(std::int64_t e) const;

 private:
  friend class Field;
  const Field* field_ = nullptr;
  std::array<std::uint32_t, kMaxDegree> c_{};
};

struct QuadraticRoots {
  std::vector<FieldElement> roots;  // distinct roots, enumeration order
  bool double_root = false;
};

class Embedding {
 public:
  Embedding() = default;
  Embedding(FieldPtr from, FieldPtr to);

  const FieldPtr& from() const { return from_; }
  const FieldPtr& to() const { return to_; }
  FieldElement up(const FieldElement& a) const;
  std::optional<FieldElement> down(const FieldElement& b) const;

 private:
  FieldPtr from_, to_;
  std::vector<FieldElement> powers_;  // images of 1, X, ..., X^{n-1}
};

struct QuadraticExtension {
  FieldPtr field;
  Embedding embedding;
};

class Field : public std::enable_shared_from_this<Field> {
  struct Key {};

 public:
  Field(Key, std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus);
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  // Throws UnsupportedPrime for p < 5 or composite p.
  static FieldPtr make(std::uint32_t p, unsigned n);

  std::uint32_t p() const { return p_; }
  unsigned degree() const { return n_; }
  std::uint64_t order() const { return q_; }
  // Monic, lowest coefficient first, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(std::int64_t v) const;
  FieldElement element(std::span<const std::int64_t> coeffs) const;
  FieldElement generator() const;  // the class of X

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::int64_t e) const;

  // All q elements, zero first, in enumeration order.
  std::vector<FieldElement> elements() const;
  std::vector<FieldElement> units() const;
  FieldElement element_at(std::uint64_t index) const;

  bool is_square(const FieldElement& a) const;
  // The first square root in enumeration order.
  std::optional<FieldElement> sqrt(const FieldElement& a) const;
  // Roots of y^2 + b y + c.
  QuadraticRoots solve_quadratic(const FieldElement& b, const FieldElement& c) const;
  bool in_subfield(const FieldElement& a, unsigned d) const;

  const QuadraticExtension& quadratic_extension() const;
  std::string format(const FieldElement& a) const;

 private:
  FieldElement raw() const;

  std::uint32_t p_;
  unsigned n_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  FieldElement nonresidue_;

  mutable std::once_flag ext_once_;
  mutable std::unique_ptr<QuadraticExtension> ext_;
};

bool is_prime(std::uint64_t n);

}  // namespace lzeta
