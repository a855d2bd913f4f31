#include "simpade/ffpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "ntt.hpp"

namespace simpade {

namespace {

using u128 = unsigned __int128;

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(u128{a} * b % m);
}

uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr size_t kSchoolbookCutoff = 32;
constexpr size_t kNttCutoff = 96;
constexpr size_t kDivisionCutoff = 64;
constexpr size_t kTaylorCutoff = 64;

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Field

Field::Field(uint64_t p) : p_(p) {
  if (p >= kMaxModulus)
    throw FieldError("modulus " + std::to_string(p) + " exceeds 2^62");
  if (!is_prime(p))
    throw FieldError("modulus " + std::to_string(p) + " is not prime");
}

uint64_t Field::reduce_signed(int64_t a) const {
  const int64_t m = static_cast<int64_t>(p_);
  int64_t r = a % m;
  return static_cast<uint64_t>(r < 0 ? r + m : r);
}

uint64_t Field::pow(uint64_t a, uint64_t e) const { return powmod64(a, e, p_); }

uint64_t Field::inv(uint64_t a) const {
  if (a % p_ == 0) throw FieldError("inverse of zero");
  return powmod64(a, p_ - 2, p_);
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b))
    throw FieldError("mismatched moduli " + std::to_string(a.modulus()) +
                     " and " + std::to_string(b.modulus()));
}

// --------------------------------------------------------- FieldElement

FieldElement::FieldElement(Field field, uint64_t value)
    : field_(field), value_(field.reduce(value)) {}

FieldElement FieldElement::from_signed(Field field, int64_t value) {
  return FieldElement(field, field.reduce_signed(value));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return FieldElement(field_, field_.add(value_, o.value_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return FieldElement(field_, field_.sub(value_, o.value_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return FieldElement(field_, field_.mul(value_, o.value_));
}
FieldElement FieldElement::operator-() const {
  return FieldElement(field_, field_.neg(value_));
}
FieldElement FieldElement::inverse() const {
  return FieldElement(field_, field_.inv(value_));
}

// ----------------------------------------------------- raw multiplication

namespace detail {

std::vector<uint64_t> mul_schoolbook(const Field& f,
                                     const std::vector<uint64_t>& a,
                                     const std::vector<uint64_t>& b) {
  if (a.empty() || b.empty()) return {};
  const uint64_t p = f.modulus();
  std::vector<u128> acc(a.size() + b.size() - 1, 0);
  // 2^128 / p^2 terms can be summed before overflow; for p < 2^62 that is
  // at least 16, so reduce the accumulator every 16 rows.
  size_t rows = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const u128 ai = a[i];
    for (size_t j = 0; j < b.size(); ++j) acc[i + j] += ai * b[j];
    if (++rows == 16) {
      rows = 0;
      for (auto& v : acc) v %= p;
    }
  }
  std::vector<uint64_t> out(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<uint64_t>(acc[i] % p);
  return out;
}

namespace {

void add_into(const Field& f, std::vector<uint64_t>& dst, size_t offset,
              const std::vector<uint64_t>& src) {
  if (dst.size() < offset + src.size()) dst.resize(offset + src.size(), 0);
  for (size_t i = 0; i < src.size(); ++i)
    dst[offset + i] = f.add(dst[offset + i], src[i]);
}

void sub_into(const Field& f, std::vector<uint64_t>& dst,
              const std::vector<uint64_t>& src) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0);
  for (size_t i = 0; i < src.size(); ++i) dst[i] = f.sub(dst[i], src[i]);
}

std::vector<uint64_t> slice(const std::vector<uint64_t>& v, size_t from,
                            size_t to) {
  from = std::min(from, v.size());
  to = std::min(to, v.size());
  return {v.begin() + static_cast<std::ptrdiff_t>(from),
          v.begin() + static_cast<std::ptrdiff_t>(to)};
}

std::vector<uint64_t> karatsuba_balanced(const Field& f,
                                         const std::vector<uint64_t>& a,
                                         const std::vector<uint64_t>& b) {
  const size_t n = std::max(a.size(), b.size());
  if (std::min(a.size(), b.size()) < kSchoolbookCutoff)
    return mul_schoolbook(f, a, b);
  const size_t m = n / 2;
  auto a0 = slice(a, 0, m), a1 = slice(a, m, n);
  auto b0 = slice(b, 0, m), b1 = slice(b, m, n);
  auto z0 = karatsuba_balanced(f, a0, b0);
  auto z2 = karatsuba_balanced(f, a1, b1);
  auto sa = a0, sb = b0;
  add_into(f, sa, 0, a1);
  add_into(f, sb, 0, b1);
  auto z1 = karatsuba_balanced(f, sa, sb);
  sub_into(f, z1, z0);
  sub_into(f, z1, z2);
  std::vector<uint64_t> out(a.size() + b.size() - 1, 0);
  add_into(f, out, 0, z0);
  add_into(f, out, m, z1);
  add_into(f, out, 2 * m, z2);
  out.resize(a.size() + b.size() - 1);
  return out;
}

}  // namespace

std::vector<uint64_t> mul_karatsuba(const Field& f,
                                    const std::vector<uint64_t>& a,
                                    const std::vector<uint64_t>& b) {
  if (a.empty() || b.empty()) return {};
  const auto& lo = a.size() <= b.size() ? a : b;
  const auto& hi = a.size() <= b.size() ? b : a;
  if (lo.size() < kSchoolbookCutoff) return mul_schoolbook(f, a, b);
  if (hi.size() < 2 * lo.size()) return karatsuba_balanced(f, lo, hi);
  // Unbalanced: chunk the longer operand.
  std::vector<uint64_t> out(a.size() + b.size() - 1, 0);
  for (size_t at = 0; at < hi.size(); at += lo.size()) {
    auto chunk = slice(hi, at, at + lo.size());
    add_into(f, out, at, karatsuba_balanced(f, lo, chunk));
  }
  out.resize(a.size() + b.size() - 1);
  return out;
}

std::vector<uint64_t> mul_auto(const Field& f, const std::vector<uint64_t>& a,
                               const std::vector<uint64_t>& b) {
  if (a.empty() || b.empty()) return {};
  const size_t lo = std::min(a.size(), b.size());
  if (lo < kSchoolbookCutoff) return mul_schoolbook(f, a, b);
  const size_t result_len = a.size() + b.size() - 1;
  if (lo >= kNttCutoff) {
    if (const int primes = ntt::primes_needed(f.modulus(), lo, 1, result_len))
      return ntt::multiply(f, primes, a, b);
  }
  return mul_karatsuba(f, a, b);
}

}  // namespace detail

// ------------------------------------------------------------------ Poly

Poly::Poly(Field field, std::vector<uint64_t> coeffs)
    : field_(field), c_(std::move(coeffs)) {
  for (uint64_t v : c_) {
    if (v >= field_.modulus())
      throw FieldError("coefficient " + std::to_string(v) +
                       " not reduced modulo " +
                       std::to_string(field_.modulus()));
  }
  trim();
}

Poly Poly::constant(Field field, uint64_t c) {
  return Poly(field, {field.reduce(c)});
}

Poly Poly::monomial(Field field, uint64_t c, size_t exponent) {
  c = field.reduce(c);
  if (c == 0) return Poly(field);
  std::vector<uint64_t> v(exponent + 1, 0);
  v[exponent] = c;
  return Poly(field, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

size_t Poly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return 0;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = field_.neg(v);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_field(field_, o.field_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_field(field_, o.field_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly Poly::operator*(const Poly& o) const { return poly_mul(*this, o); }

Poly Poly::scaled(uint64_t c) const {
  c = field_.reduce(c);
  if (c == 0) return Poly(field_);
  Poly r = *this;
  for (auto& v : r.c_) v = field_.mul(v, c);
  return r;
}

Poly Poly::shifted_up(size_t k) const {
  if (c_.empty() || k == 0) return *this;
  Poly r(field_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::shifted_down(size_t k) const {
  if (k >= c_.size()) return Poly(field_);
  Poly r(field_);
  r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
  return r;
}

Poly Poly::truncated(size_t k) const {
  if (k >= c_.size()) return *this;
  Poly r(field_);
  r.c_.assign(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
  r.trim();
  return r;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_.inv(c_.back()));
}

uint64_t Poly::evaluate(uint64_t at) const {
  at = field_.reduce(at);
  uint64_t r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, at), c_[i]);
  return r;
}

void Poly::add_scaled_shifted(const Poly& o, uint64_t c, size_t k) {
  require_same_field(field_, o.field_);
  c = field_.reduce(c);
  if (c == 0 || o.c_.empty()) return;
  if (c_.size() < o.c_.size() + k) c_.resize(o.c_.size() + k, 0);
  for (size_t i = 0; i < o.c_.size(); ++i)
    c_[i + k] = field_.add(c_[i + k], field_.mul(c, o.c_[i]));
  trim();
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c_[i] == 1;
    if (i == 0) {
      out += std::to_string(c_[i]);
      continue;
    }
    if (!unit) out += std::to_string(c_[i]) + "*";
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

// ------------------------------------------------------- free functions

Poly poly_mul(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  return Poly(a.field(), detail::mul_auto(a.field(), a.coeffs(), b.coeffs()));
}

Poly series_inverse(const Poly& a, size_t precision) {
  const Field& f = a.field();
  if (a.coeff(0) == 0) throw std::domain_error("series not invertible");
  Poly b = Poly::constant(f, f.inv(a.coeff(0)));
  size_t k = 1;
  while (k < precision) {
    k = std::min(2 * k, precision);
    Poly ab = (a.truncated(k) * b).truncated(k);
    // b <- b*(2 - ab)
    Poly corr = -ab;
    corr += Poly::constant(f, 2);
    b = (b * corr).truncated(k);
  }
  return b.truncated(precision);
}

namespace {

std::vector<uint64_t> reversed(const std::vector<uint64_t>& v, size_t len) {
  std::vector<uint64_t> r(len, 0);
  for (size_t i = 0; i < std::min(len, v.size()); ++i) r[len - 1 - i] = v[i];
  return r;
}

}  // namespace

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  const Field& f = a.field();
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly(f), a};
  const size_t da = a.size() - 1, db = b.size() - 1;
  const size_t dq = da - db;
  if (dq >= kDivisionCutoff && db >= kDivisionCutoff) {
    // Newton: rev(q) = rev(a) / rev(b) mod x^(dq+1)
    Poly ra(f, reversed(a.coeffs(), da + 1));
    Poly rb(f, reversed(b.coeffs(), db + 1));
    Poly rq = (ra.truncated(dq + 1) * series_inverse(rb, dq + 1)).truncated(dq + 1);
    Poly q(f, reversed(rq.coeffs(), dq + 1));
    Poly r = a - q * b;
    return {q, r};
  }
  std::vector<uint64_t> rem = a.coeffs();
  std::vector<uint64_t> quo(dq + 1, 0);
  const uint64_t lc_inv = f.inv(b.leading());
  const auto& bc = b.coeffs();
  for (size_t i = dq + 1; i-- > 0;) {
    const uint64_t c = f.mul(rem[i + db], lc_inv);
    quo[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= db; ++j)
      rem[i + j] = f.sub(rem[i + j], f.mul(c, bc[j]));
  }
  rem.resize(db);
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

namespace {

Poly taylor_naive(const Poly& a, uint64_t alpha) {
  const Field& f = a.field();
  std::vector<uint64_t> c = a.coeffs();
  const size_t n = c.size();
  // Repeated synthetic division by (x - (-alpha)).
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j > i; --j) c[j - 1] = f.add(c[j - 1], f.mul(alpha, c[j]));
  return Poly(f, std::move(c));
}

Poly taylor_rec(const Poly& a, uint64_t alpha, const std::vector<Poly>& powers,
                size_t level) {
  if (a.size() <= kTaylorCutoff || level == 0) return taylor_naive(a, alpha);
  const size_t m = size_t{1} << level;
  if (a.size() <= m) return taylor_rec(a, alpha, powers, level - 1);
  Poly lo = a.truncated(m);
  Poly hi = a.shifted_down(m);
  return taylor_rec(lo, alpha, powers, level - 1) +
         powers[level] * taylor_rec(hi, alpha, powers, level - 1);
}

}  // namespace

Poly poly_substitute_shift(const Poly& a, uint64_t alpha) {
  const Field& f = a.field();
  alpha = f.reduce(alpha);
  if (alpha == 0 || a.size() <= 1) return a;
  if (a.size() <= kTaylorCutoff) return taylor_naive(a, alpha);
  // powers[k] = (x + alpha)^(2^k)
  std::vector<Poly> powers{Poly(f, {alpha, 1})};
  size_t level = 0;
  while ((size_t{2} << level) < a.size()) {
    powers.push_back(powers.back() * powers.back());
    ++level;
  }
  return taylor_rec(a, alpha, powers, level);
}

Poly poly_substitute_shift(const Poly& a, const FieldElement& alpha) {
  require_same_field(a.field(), alpha.field());
  return poly_substitute_shift(a, alpha.value());
}

}  // namespace simpade
