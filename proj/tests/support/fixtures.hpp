#pragma once

// Shared test data (the worked GF(2) examples) and independent reference
// implementations used as oracles by the unit and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <random>
#include <vector>

#include "simpade/ffpoly.hpp"
#include "simpade/polymat.hpp"
#include "simpade/solver.hpp"

namespace simpade::testing {

inline const Field kGF2{2};

// Sum of x^e over the listed exponents (each with coefficient 1).
inline Poly terms(const Field& f, std::initializer_list<size_t> exps) {
  Poly p(f);
  for (size_t e : exps) p += Poly::x_power(f, e);
  return p;
}
inline Poly t2(std::initializer_list<size_t> exps) { return terms(kGF2, exps); }
inline Poly zero2() { return Poly(kGF2); }
inline Poly one2() { return Poly::constant(kGF2, 1); }

inline PolyMatrix matrix(const Field& f, std::vector<std::vector<Poly>> rows) {
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  return PolyMatrix(f, cols, std::move(rows));
}

// S = (x^4+x^2+1, x^4+1, x^4+x^3+1), g_i = x^5, N = (5,3,4,5) over GF(2).
inline ProblemInstance example1() {
  return validate_instance(kGF2, {t2({4, 2, 0}), t2({4, 0}), t2({4, 3, 0})},
                           {t2({5}), t2({5}), t2({5})}, {5, 3, 4, 5});
}

// The printed completion of (x^4+1, x^3+x).
inline PolyMatrix example2_completion() {
  return matrix(kGF2, {{t2({4, 0}), t2({2, 0}), one2(), t2({3, 0})},
                       {t2({3, 1}), t2({1}), t2({3, 1}), t2({4, 3, 1})}});
}

// Printed N-Popov approximant basis of (1, S)^T to order 5.
inline PolyMatrix duality_G() {
  return matrix(kGF2, {{t2({1}), zero2(), t2({1}), zero2()},
                       {one2(), t2({2, 0}), zero2(), zero2()},
                       {zero2(), one2(), t2({2, 0}), zero2()},
                       {zero2(), t2({1}), t2({1, 0}), one2()}});
}

// Printed adj(G)^T.
inline PolyMatrix duality_adjG_T() {
  return matrix(kGF2, {{t2({4, 0}), t2({2, 0}), one2(), t2({3, 0})},
                       {t2({1}), t2({3, 1}), t2({1}), t2({4, 1})},
                       {t2({3, 1}), t2({1}), t2({3, 1}), t2({4, 3, 1})},
                       {zero2(), zero2(), zero2(), t2({5})}});
}

// Printed r-Popov basis of the intersection matrix R, r = (-5,-1,-1,-3,-2).
inline PolyMatrix intersection_G() {
  return matrix(kGF2, {{t2({8}), zero2(), zero2(), zero2(), zero2()},
                       {t2({3, 1, 0}), t2({4, 0}), one2(), zero2(), one2()},
                       {t2({3, 2, 1, 0}), one2(), t2({1, 0}), one2(), one2()},
                       {t2({4, 3, 1, 0}), one2(), one2(), t2({2}), one2()},
                       {t2({4, 0}), one2(), zero2(), t2({1, 0}), t2({1, 0})}});
}

inline PolyMatrix intersection_R() {
  return matrix(kGF2, {{one2(), one2()},
                       {t2({4, 0}), zero2()},
                       {t2({3, 1}), zero2()},
                       {zero2(), t2({2})},
                       {zero2(), t2({3, 1, 0})}});
}

inline const Shift kIntersectionShift{-5, -1, -1, -3, -2};

// ------------------------------------------------------------ generators

inline Poly random_poly(std::mt19937_64& rng, const Field& f, int64_t max_deg) {
  if (max_deg < 0) return Poly(f);
  std::uniform_int_distribution<uint64_t> c(0, f.modulus() - 1);
  std::vector<uint64_t> v(static_cast<size_t>(max_deg) + 1);
  for (auto& e : v) e = c(rng);
  return Poly(f, std::move(v));
}

inline PolyMatrix random_matrix(std::mt19937_64& rng, const Field& f, size_t rows,
                                size_t cols, int64_t max_deg) {
  PolyMatrix m(f, rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m(i, j) = random_poly(rng, f, max_deg);
  return m;
}

inline int64_t uniform_int(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

// Product of `ops` random elementary row operations (unimodular).
inline PolyMatrix random_unimodular(std::mt19937_64& rng, const Field& f, size_t n,
                                    size_t ops, int64_t max_deg) {
  PolyMatrix u = PolyMatrix::identity(f, n);
  if (n < 2) {
    if (n == 1) u(0, 0) = Poly::constant(f, uniform_int(rng, 1, int64_t(f.modulus()) - 1));
    return u;
  }
  for (size_t k = 0; k < ops; ++k) {
    const size_t i = static_cast<size_t>(uniform_int(rng, 0, int64_t(n) - 1));
    size_t j = static_cast<size_t>(uniform_int(rng, 0, int64_t(n) - 2));
    if (j >= i) ++j;
    switch (uniform_int(rng, 0, 2)) {
      case 0:
        u.add_row_multiple(i, j, random_poly(rng, f, max_deg));
        break;
      case 1:
        u.swap_rows(i, j);
        break;
      default:
        u.scale_row(i, static_cast<uint64_t>(uniform_int(rng, 1, int64_t(f.modulus()) - 1)));
    }
  }
  return u;
}

// ------------------------------------------------------------- oracles

// Quadratic product with per-term reduction; no shared code with Poly.
inline std::vector<uint64_t> schoolbook(uint64_t p, const std::vector<uint64_t>& a,
                                        const std::vector<uint64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<uint64_t>(
          (out[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline Poly schoolbook(const Poly& a, const Poly& b) {
  return Poly(a.field(), schoolbook(a.field().modulus(), a.coeffs(), b.coeffs()));
}

inline PolyMatrix triple_loop_product(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix c(a.field(), a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j)
      for (size_t k = 0; k < a.cols(); ++k) c(i, j) += schoolbook(a(i, k), b(k, j));
  return c;
}

// Laplace expansion along the first row.
inline Poly cofactor_det(const PolyMatrix& m) {
  const size_t n = m.rows();
  const Field& f = m.field();
  if (n == 0) return Poly::constant(f, 1);
  if (n == 1) return m(0, 0);
  Poly det(f);
  for (size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    PolyMatrix minor(f, n - 1, n - 1);
    for (size_t i = 1; i < n; ++i)
      for (size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    Poly term = schoolbook(m(0, j), cofactor_det(minor));
    det = j % 2 == 0 ? det + term : det - term;
  }
  return det;
}

// Entry (r, c) of adj(m) = (-1)^(r+c) det(m without row c and column r).
inline Poly cofactor_adjoint_entry(const PolyMatrix& m, size_t r, size_t c) {
  const size_t n = m.rows();
  PolyMatrix minor(m.field(), n - 1, n - 1);
  for (size_t i = 0, ri = 0; i < n; ++i) {
    if (i == c) continue;
    for (size_t k = 0, ck = 0; k < n; ++k)
      if (k != r) minor(ri, ck++) = m(i, k);
    ++ri;
  }
  Poly d = cofactor_det(minor);
  return (r + c) % 2 == 0 ? d : -d;
}

inline std::vector<Poly> cofactor_adjoint_first_row(const PolyMatrix& m) {
  std::vector<Poly> row;
  if (m.rows() == 1) return {Poly::constant(m.field(), 1)};
  for (size_t c = 0; c < m.rows(); ++c) row.push_back(cofactor_adjoint_entry(m, 0, c));
  return row;
}

inline PolyMatrix cofactor_adjoint(const PolyMatrix& m) {
  const size_t n = m.rows();
  PolyMatrix adj(m.field(), n, n);
  if (n == 1) {
    adj(0, 0) = Poly::constant(m.field(), 1);
    return adj;
  }
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) adj(r, c) = cofactor_adjoint_entry(m, r, c);
  return adj;
}

// All non-zero GF(2)-combinations of the given polynomials, as a sorted set.
inline std::vector<std::vector<uint64_t>> gf2_span(const std::vector<Poly>& gens) {
  std::vector<std::vector<uint64_t>> out;
  for (size_t mask = 1; mask < (size_t{1} << gens.size()); ++mask) {
    Poly acc(kGF2);
    for (size_t i = 0; i < gens.size(); ++i)
      if (mask >> i & 1) acc += gens[i];
    if (!acc.is_zero()) out.push_back(acc.coeffs());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_zero_mod_xd(const PolyMatrix& m, size_t d) {
  return m.truncated(d).is_zero();
}

// deg det when det is c*x^D; -1 otherwise.
inline int64_t monomial_exponent(const Poly& det) {
  if (det.is_zero() || det.valuation() != det.size() - 1 || det.leading() != 1) return -1;
  return det.degree();
}

}  // namespace simpade::testing
