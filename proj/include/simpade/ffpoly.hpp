#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace simpade {

// Degree of the zero polynomial; compares below every finite degree.
inline constexpr int64_t kNegInf = std::numeric_limits<int64_t>::min();

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(uint64_t n);

// The prime field GF(p). Cheap to copy; two fields are equal iff their
// moduli are equal.
class Field {
 public:
  // Largest accepted modulus. Products are formed in 128 bits.
  static constexpr uint64_t kMaxModulus = (uint64_t{1} << 62);

  explicit Field(uint64_t p);

  uint64_t modulus() const { return p_; }

  uint64_t reduce(uint64_t a) const { return a % p_; }
  uint64_t reduce_signed(int64_t a) const;
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  uint64_t pow(uint64_t a, uint64_t e) const;
  // Throws FieldError on zero.
  uint64_t inv(uint64_t a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  uint64_t p_;
};

// Throws FieldError unless both fields agree.
void require_same_field(const Field& a, const Field& b);

class FieldElement {
 public:
  FieldElement(Field field, uint64_t value);
  static FieldElement from_signed(Field field, int64_t value);

  const Field& field() const { return field_; }
  uint64_t value() const { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const {
    return field_ == o.field_ && value_ == o.value_;
  }

 private:
  Field field_;
  uint64_t value_;
};

// Dense univariate polynomial over GF(p), ascending coefficients, never
// storing a trailing zero.
class Poly {
 public:
  explicit Poly(Field field) : field_(field) {}
  // Coefficients must already lie in [0, p); trailing zeros are trimmed.
  Poly(Field field, std::vector<uint64_t> coeffs);

  static Poly constant(Field field, uint64_t c);
  static Poly monomial(Field field, uint64_t c, size_t exponent);
  static Poly x_power(Field field, size_t exponent) {
    return monomial(field, 1, exponent);
  }

  const Field& field() const { return field_; }
  const std::vector<uint64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  size_t size() const { return c_.size(); }
  int64_t degree() const {
    return c_.empty() ? kNegInf : static_cast<int64_t>(c_.size()) - 1;
  }
  uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  // x-adic valuation; size() for the zero polynomial is meaningless, so
  // returns 0 there.
  size_t valuation() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  Poly scaled(uint64_t c) const;
  // this * x^k
  Poly shifted_up(size_t k) const;
  // this div x^k
  Poly shifted_down(size_t k) const;
  // this mod x^k
  Poly truncated(size_t k) const;
  Poly monic() const;
  uint64_t evaluate(uint64_t at) const;

  // Adds c * x^k * o in place.
  void add_scaled_shifted(const Poly& o, uint64_t c, size_t k);

  bool operator==(const Poly& o) const {
    return field_ == o.field_ && c_ == o.c_;
  }

  std::string to_string() const;

 private:
  void trim();

  Field field_;
  std::vector<uint64_t> c_;
};

// Throws FieldError on mismatched moduli.
Poly poly_mul(const Poly& a, const Poly& b);

// a = q*b + r with deg r < deg b. Throws std::domain_error if b is zero.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

inline Poly poly_rem(const Poly& a, const Poly& b) {
  return poly_divrem(a, b).second;
}

// Returns a(x + alpha).
Poly poly_substitute_shift(const Poly& a, uint64_t alpha);
Poly poly_substitute_shift(const Poly& a, const FieldElement& alpha);

// Inverse of a power series with nonzero constant term, mod x^precision.
Poly series_inverse(const Poly& a, size_t precision);

namespace detail {

// Raw coefficient-vector products used by Poly and the matrix layer.
std::vector<uint64_t> mul_schoolbook(const Field& f,
                                     const std::vector<uint64_t>& a,
                                     const std::vector<uint64_t>& b);
std::vector<uint64_t> mul_karatsuba(const Field& f,
                                    const std::vector<uint64_t>& a,
                                    const std::vector<uint64_t>& b);
std::vector<uint64_t> mul_auto(const Field& f, const std::vector<uint64_t>& a,
                               const std::vector<uint64_t>& b);

}  // namespace detail

}  // namespace simpade
