#include "simpade/adjrow.hpp"

#include <algorithm>
#include <string>

namespace simpade {

namespace {

uint64_t constant_determinant(ConstMatrix m) {
  const Field& f = m.field();
  const size_t n = m.rows();
  uint64_t det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const uint64_t inv = f.inv(m(c, c));
    for (size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const uint64_t factor = f.mul(m(i, c), inv);
      for (size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

ConstMatrix evaluate_at(const PolyMatrix& a, uint64_t point) {
  ConstMatrix m(a.field(), a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).evaluate(point);
  return m;
}

std::optional<ConstMatrix> constant_inverse(const ConstMatrix& a) {
  const Field& f = a.field();
  const size_t n = a.rows();
  ConstMatrix m = a, inv(f, n, n);
  for (size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return std::nullopt;
    for (size_t j = 0; j < n; ++j) {
      std::swap(m(c, j), m(piv, j));
      std::swap(inv(c, j), inv(piv, j));
    }
    const uint64_t s = f.inv(m(c, c));
    for (size_t j = 0; j < n; ++j) {
      m(c, j) = f.mul(m(c, j), s);
      inv(c, j) = f.mul(inv(c, j), s);
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const uint64_t factor = m(i, c);
      for (size_t j = 0; j < n; ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
        inv(i, j) = f.sub(inv(i, j), f.mul(factor, inv(c, j)));
      }
    }
  }
  return inv;
}

PolyMatrix substitute_shift(const PolyMatrix& a, uint64_t alpha) {
  PolyMatrix out = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      out(i, j) = poly_substitute_shift(a(i, j), alpha);
  return out;
}

}  // namespace

Poly polynomial_determinant(const PolyMatrix& f) {
  if (f.rows() != f.cols()) throw DimensionError("determinant of a non-square matrix");
  const size_t n = f.rows();
  const Field& field = f.field();
  if (n == 0) return Poly::constant(field, 1);
  PolyMatrix m = f;
  Poly prev = Poly::constant(field, 1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m(piv, k).is_zero()) ++piv;
      if (piv == n) return Poly(field);
      m.swap_rows(k, piv);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = poly_divrem(num, prev).first;
      }
    }
    prev = m(k, k);
  }
  Poly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

size_t det_power_of_x(const PolyMatrix& f) {
  if (f.rows() != f.cols()) throw DimensionError("det_power_of_x needs a square matrix");
  const size_t n = f.rows();
  const Field& field = f.field();
  if (n == 0) return 0;
  std::vector<size_t> col_deg(n);
  for (size_t j = 0; j < n; ++j) {
    int64_t d = kNegInf;
    for (size_t i = 0; i < n; ++i) d = std::max(d, f(i, j).degree());
    if (d == kNegInf) throw LiftingError("matrix has a zero column");
    col_deg[j] = static_cast<size_t>(d);
  }
  size_t total = 0;
  for (size_t d : col_deg) total += d;

  ConstMatrix lead(field, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) lead(i, j) = f(i, j).coeff(col_deg[j]);
  const uint64_t lead_det = constant_determinant(lead);
  if (lead_det == 0) {
    // Not column reduced: the column degrees only bound deg det F.
    const Poly det = polynomial_determinant(f);
    if (det.is_zero() || det.size() - 1 != det.valuation() || det.leading() != 1)
      throw LiftingError("determinant " + det.to_string() + " is not a power of x");
    return det.size() - 1;
  }
  // Column reduced with unit leading determinant => det F = x^D + lower.
  if (lead_det != 1)
    throw LiftingError("determinant is not x^D: its leading coefficient is " +
                       std::to_string(lead_det));
  if (constant_determinant(evaluate_at(f, 1)) != 1)
    throw LiftingError("determinant is not x^D: det F(1) != 1");
  // Every Bareiss intermediate is a minor of F, so of degree <= total here.
  if (!(polynomial_determinant(f) == Poly::x_power(field, total)))
    throw LiftingError("determinant is not x^" + std::to_string(total));
  return total;
}

std::vector<Poly> lifted_vector_solve(const std::vector<Poly>& v,
                                      const PolyMatrix& f, size_t precision) {
  if (f.rows() != f.cols()) throw DimensionError("lifted solve needs a square matrix");
  if (v.size() != f.rows()) throw DimensionError("lifted solve: vector length mismatch");
  const Field& field = f.field();
  const size_t n = f.rows();
  if (n == 0) return {};

  const PolyMatrix shifted = substitute_shift(f, 1);
  const auto base = constant_inverse(evaluate_at(f, 1));
  if (!base) throw LiftingError("matrix is singular at x = 1");

  // Newton iteration X <- X (2I - F X) mod x^k for F(x+1)^-1.
  PolyMatrix x_inv(field, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) x_inv(i, j) = Poly::constant(field, (*base)(i, j));
  size_t k = 1;
  while (k < precision) {
    k = std::min(2 * k, precision);
    PolyMatrix err = mat_mul(shifted.truncated(k), x_inv).truncated(k);
    PolyMatrix corr(field, n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) corr(i, j) = -err(i, j);
    for (size_t i = 0; i < n; ++i) corr(i, i) += Poly::constant(field, 2);
    x_inv = mat_mul(x_inv, corr).truncated(k);
  }

  std::vector<Poly> v_shifted;
  v_shifted.reserve(n);
  for (const auto& e : v) v_shifted.push_back(poly_substitute_shift(e, 1));
  std::vector<Poly> w_shifted = vec_mat_mul(v_shifted, x_inv);
  std::vector<Poly> w;
  w.reserve(n);
  for (const auto& e : w_shifted)
    w.push_back(poly_substitute_shift(e.truncated(precision), field.neg(1)));

  if (vec_mat_mul(w, f) != v)
    throw LiftingError("no polynomial solution of degree < " + std::to_string(precision));
  return w;
}

AdjRowResult adjoint_first_row(const PolyMatrix& f) {
  const size_t d = det_power_of_x(f);
  std::vector<Poly> rhs(f.rows(), Poly(f.field()));
  if (!rhs.empty()) rhs[0] = Poly::x_power(f.field(), d);
  return {lifted_vector_solve(rhs, f, d + 1), d};
}

}  // namespace simpade
