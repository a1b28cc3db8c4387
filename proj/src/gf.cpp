#include "lzeta/gf.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "lzeta/error.hpp"

namespace lzeta {

namespace {

using Coeffs = std::vector<std::int64_t>;

std::int64_t mod_p(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod_p(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = mod_p(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over F_p, b nonzero.
Coeffs poly_rem(Coeffs a, const Coeffs& b, std::int64_t p, Coeffs* quot = nullptr) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::int64_t lead_inv = inv_mod_p(b.back(), p);
  if (quot) quot->assign(a.size() >= b.size() ? a.size() - db : 1, 0);
  while (a.size() >= b.size()) {
    const std::int64_t t = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    if (quot) (*quot)[shift] = t;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = mod_p(a[shift + j] - t * b[j], p);
    trim(a);
  }
  return a;
}

bool has_factor_of_degree(const std::vector<std::uint32_t>& f, std::uint32_t p, unsigned d) {
  Coeffs ff(f.begin(), f.end());
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= p;
  Coeffs g(d + 1, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = 0; i < d; ++i) {
      g[i] = static_cast<std::int64_t>(v % p);
      v /= p;
    }
    g[d] = 1;
    if (poly_rem(ff, g, p).empty()) return true;
  }
  return false;
}

bool irreducible_over_prime_field(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= n; ++d)
    if (has_factor_of_degree(f, p, d)) return false;
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned n) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < n; ++i) count *= p;
  std::vector<std::uint32_t> f(n + 1, 0);
  f[n] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (n == 1 || irreducible_over_prime_field(f, p)) return f;
  }
  fail(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

// Polynomials with coefficients in an arbitrary Field, lowest degree first.
using FPoly = std::vector<FieldElement>;

void trim(FPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

FPoly fpoly_rem(FPoly a, const FPoly& b) {
  trim(a);
  const FieldElement lead_inv = b.back().inv();
  while (a.size() >= b.size()) {
    const FieldElement t = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - t * b[j];
    trim(a);
  }
  return a;
}

FPoly fpoly_quot(FPoly a, const FPoly& b) {
  trim(a);
  const FieldElement lead_inv = b.back().inv();
  FPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, b.back().field()->zero());
  while (a.size() >= b.size()) {
    const FieldElement t = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    q[shift] = t;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - t * b[j];
    trim(a);
  }
  return q;
}

FPoly fpoly_mulmod(const FPoly& a, const FPoly& b, const FPoly& m) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, a[0].field()->zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return fpoly_rem(std::move(r), m);
}

FPoly fpoly_powmod(FPoly base, std::uint64_t e, const FPoly& m) {
  FPoly r{base.front().field()->one()};
  base = fpoly_rem(std::move(base), m);
  while (e > 0) {
    if (e & 1) r = fpoly_mulmod(r, base, m);
    base = fpoly_mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

FPoly fpoly_gcd(FPoly a, FPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FPoly r = fpoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const FieldElement li = a.back().inv();
    for (auto& c : a) c = c * li;
  }
  return a;
}

// Roots of a squarefree polynomial that splits into linear factors.
void split_roots(const FPoly& f, const Field& k, std::vector<FieldElement>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(-(f[0] / f[1]));
    return;
  }
  const std::uint64_t half = (k.order() - 1) / 2;
  for (std::uint64_t i = 0; i < k.order(); ++i) {
    FPoly lin{k.element_at(i), k.one()};
    FPoly h = fpoly_powmod(lin, half, f);
    if (h.empty()) continue;
    h[0] = h[0] - k.one();
    FPoly g = fpoly_gcd(f, h);
    if (g.size() > 1 && g.size() < f.size()) {
      split_roots(g, k, out);
      split_roots(fpoly_quot(f, g), k, out);
      return;
    }
  }
  fail(ErrorKind::InvalidArgument, "polynomial does not split");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- FieldElement -------------------------------------------------------

std::span<const std::uint32_t> FieldElement::coeffs() const {
  return {c_.data(), field_ ? field_->degree() : 0u};
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  for (std::size_t i = kMaxDegree; i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
  return std::strong_ordering::equal;
}

FieldElement FieldElement::operator-() const { return field_->neg(*this); }
FieldElement operator+(const FieldElement& a, const FieldElement& b) { return a.field_->add(a, b); }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a.field_->sub(a, b); }
FieldElement operator*(const FieldElement& a, const FieldElement& b) { return a.field_->mul(a, b); }
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a.field_->mul(a, a.field_->inv(b));
}
FieldElement FieldElement::inv() const { return field_->inv(*this); }
FieldElement FieldElement::pow(std::int64_t e) const { return field_->pow(*this, e); }

// ---- Field --------------------------------------------------------------

Field::Field(Key, std::uint32_t p, unsigned n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < n; ++i) q_ *= p;
}

FieldPtr Field::make(std::uint32_t p, unsigned n) {
  if (p < 5 || !is_prime(p))
    fail(ErrorKind::UnsupportedPrime, "unsupported prime " + std::to_string(p) + " (need an odd prime >= 5)");
  if (n < 1 || n > kMaxDegree)
    fail(ErrorKind::InvalidArgument, "field degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) fail(ErrorKind::InvalidArgument, "field too large");
    q *= p;
  }

  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find({p, n}); it != cache.end()) return it->second;

  auto f = std::make_shared<Field>(Key{}, p, n, smallest_irreducible(p, n));
  const std::uint64_t half = (f->q_ - 1) / 2;
  for (std::uint64_t i = 2; i < f->q_; ++i) {
    FieldElement a = f->element_at(i);
    if (!f->pow(a, static_cast<std::int64_t>(half)).is_one()) {
      f->nonresidue_ = a;
      break;
    }
  }
  cache.emplace(std::make_pair(p, n), f);
  return f;
}

FieldElement Field::raw() const {
  FieldElement e;
  e.field_ = this;
  return e;
}

FieldElement Field::zero() const { return raw(); }

FieldElement Field::one() const {
  FieldElement e = raw();
  e.c_[0] = 1;
  return e;
}

FieldElement Field::element(std::int64_t v) const {
  FieldElement e = raw();
  e.c_[0] = static_cast<std::uint32_t>(mod_p(v, p_));
  return e;
}

FieldElement Field::element(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > n_)
    fail(ErrorKind::InvalidArgument, "too many coefficients for a degree-" + std::to_string(n_) + " field");
  FieldElement e = raw();
  for (std::size_t i = 0; i < coeffs.size(); ++i) e.c_[i] = static_cast<std::uint32_t>(mod_p(coeffs[i], p_));
  return e;
}

FieldElement Field::generator() const {
  if (n_ == 1) return element(-static_cast<std::int64_t>(modulus_[0]));
  FieldElement e = raw();
  e.c_[1] = 1;
  return e;
}

FieldElement Field::element_at(std::uint64_t index) const {
  FieldElement e = raw();
  for (unsigned i = 0; i < n_; ++i) {
    e.c_[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = raw();
  for (unsigned i = 0; i < n_; ++i) {
    std::uint32_t s = a.c_[i] + b.c_[i];
    r.c_[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = raw();
  for (unsigned i = 0; i < n_; ++i) r.c_[i] = a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + p_ - b.c_[i];
  return r;
}

FieldElement Field::neg(const FieldElement& a) const {
  FieldElement r = raw();
  for (unsigned i = 0; i < n_; ++i) r.c_[i] = a.c_[i] == 0 ? 0 : p_ - a.c_[i];
  return r;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  std::array<std::uint64_t, 2 * kMaxDegree> t{};
  for (unsigned i = 0; i < n_; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) t[i + j] = (t[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p_;
  }
  for (unsigned i = 2 * n_ - 1; i-- > n_;) {
    const std::uint64_t c = t[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < n_; ++j) t[i - n_ + j] = (t[i - n_ + j] + (p_ - c) * modulus_[j]) % p_;
  }
  FieldElement r = raw();
  for (unsigned i = 0; i < n_; ++i) r.c_[i] = static_cast<std::uint32_t>(t[i]);
  return r;
}

FieldElement Field::inv(const FieldElement& a) const {
  if (a.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  const std::int64_t p = p_;
  if (n_ == 1) return element(inv_mod_p(a.c_[0], p));
  // Extended Euclid on (modulus, a) over F_p.
  Coeffs r0(modulus_.begin(), modulus_.end());
  Coeffs r1(a.c_.begin(), a.c_.begin() + n_);
  trim(r1);
  Coeffs s0{0}, s1{1};
  while (!r1.empty()) {
    Coeffs q;
    Coeffs r = poly_rem(r0, r1, p, &q);
    Coeffs s(std::max(s0.size(), q.size() + s1.size()), 0);
    for (std::size_t i = 0; i < s0.size(); ++i) s[i] = s0[i];
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) s[i + j] = mod_p(s[i + j] - q[i] * s1[j], p);
    trim(s);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const std::int64_t c = inv_mod_p(r0[0], p);
  FieldElement out = raw();
  for (std::size_t i = 0; i < s0.size() && i < n_; ++i) out.c_[i] = static_cast<std::uint32_t>(s0[i] * c % p);
  return out;
}

FieldElement Field::pow(const FieldElement& a, std::int64_t e) const {
  FieldElement b = a;
  if (e < 0) {
    b = inv(a);
    e = -e;
  }
  FieldElement r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(element_at(i));
  return out;
}

std::vector<FieldElement> Field::units() const {
  std::vector<FieldElement> out;
  out.reserve(q_ - 1);
  for (std::uint64_t i = 1; i < q_; ++i) out.push_back(element_at(i));
  return out;
}

bool Field::is_square(const FieldElement& a) const {
  if (a.is_zero()) return true;
  return pow(a, static_cast<std::int64_t>((q_ - 1) / 2)).is_one();
}

std::optional<FieldElement> Field::sqrt(const FieldElement& a) const {
  if (a.is_zero()) return zero();
  if (!is_square(a)) return std::nullopt;
  // Tonelli-Shanks.
  std::uint64_t t = q_ - 1;
  unsigned s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  FieldElement z = pow(nonresidue_, static_cast<std::int64_t>(t));
  FieldElement x = pow(a, static_cast<std::int64_t>((t + 1) / 2));
  FieldElement b = pow(a, static_cast<std::int64_t>(t));
  unsigned m = s;
  while (!b.is_one()) {
    unsigned i = 0;
    FieldElement bb = b;
    while (!bb.is_one()) {
      bb = mul(bb, bb);
      ++i;
    }
    FieldElement w = z;
    for (unsigned j = 0; j + 1 < m - i; ++j) w = mul(w, w);
    x = mul(x, w);
    z = mul(w, w);
    b = mul(b, z);
    m = i;
  }
  FieldElement y = neg(x);
  return std::min(x, y);
}

QuadraticRoots Field::solve_quadratic(const FieldElement& b, const FieldElement& c) const {
  QuadraticRoots out;
  const FieldElement two = element(2);
  const FieldElement disc = sub(mul(b, b), mul(element(4), c));
  if (disc.is_zero()) {
    out.roots.push_back(neg(b) / two);
    out.double_root = true;
    return out;
  }
  auto s = sqrt(disc);
  if (!s) return out;
  FieldElement r1 = (neg(b) + *s) / two;
  FieldElement r2 = (neg(b) - *s) / two;
  if (r2 < r1) std::swap(r1, r2);
  out.roots = {r1, r2};
  return out;
}

bool Field::in_subfield(const FieldElement& a, unsigned d) const {
  FieldElement b = a;
  for (unsigned i = 0; i < d; ++i) b = pow(b, p_);
  return b == a;
}

const QuadraticExtension& Field::quadratic_extension() const {
  std::call_once(ext_once_, [this] {
    FieldPtr big = Field::make(p_, 2 * n_);
    ext_ = std::make_unique<QuadraticExtension>(QuadraticExtension{big, Embedding(shared_from_this(), big)});
  });
  return *ext_;
}

std::string Field::format(const FieldElement& a) const {
  if (n_ == 1) return std::to_string(a.c_[0]);
  std::ostringstream os;
  os << '[';
  for (unsigned i = 0; i < n_; ++i) os << (i ? "," : "") << a.c_[i];
  os << ']';
  return os.str();
}

// ---- Embedding ----------------------------------------------------------

Embedding::Embedding(FieldPtr from, FieldPtr to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->p() != to_->p() || to_->degree() % from_->degree() != 0)
    fail(ErrorKind::InvalidArgument, "no embedding between these fields");
  FPoly f;
  for (std::uint32_t c : from_->modulus()) f.push_back(to_->element(c));
  std::vector<FieldElement> roots;
  split_roots(f, *to_, roots);
  const FieldElement alpha = *std::min_element(roots.begin(), roots.end());
  FieldElement pw = to_->one();
  for (unsigned i = 0; i < from_->degree(); ++i) {
    powers_.push_back(pw);
    pw = pw * alpha;
  }
}

FieldElement Embedding::up(const FieldElement& a) const {
  FieldElement r = to_->zero();
  auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) r = r + to_->element(c[i]) * powers_[i];
  return r;
}

std::optional<FieldElement> Embedding::down(const FieldElement& b) const {
  const std::int64_t p = from_->p();
  const unsigned rows = to_->degree(), cols = from_->degree();
  std::vector<Coeffs> m(rows, Coeffs(cols + 1, 0));
  for (unsigned j = 0; j < cols; ++j) {
    auto c = powers_[j].coeffs();
    for (unsigned i = 0; i < rows; ++i) m[i][j] = c[i];
  }
  auto bc = b.coeffs();
  for (unsigned i = 0; i < rows; ++i) m[i][cols] = bc[i];

  unsigned row = 0;
  std::vector<int> pivot_col_row(cols, -1);
  for (unsigned col = 0; col < cols && row < rows; ++col) {
    unsigned piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    const std::int64_t iv = inv_mod_p(m[row][col], p);
    for (auto& v : m[row]) v = v * iv % p;
    for (unsigned i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const std::int64_t f = m[i][col];
      for (unsigned j = 0; j <= cols; ++j) m[i][j] = mod_p(m[i][j] - f * m[row][j], p);
    }
    pivot_col_row[col] = static_cast<int>(row);
    ++row;
  }
  for (unsigned i = row; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  std::vector<std::int64_t> sol(cols, 0);
  for (unsigned col = 0; col < cols; ++col)
    if (pivot_col_row[col] >= 0) sol[col] = m[pivot_col_row[col]][cols];
  return from_->element(sol);
}

}  // namespace lzeta
