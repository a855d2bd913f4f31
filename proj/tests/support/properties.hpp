#pragma once

// Property checks shared by the unit tests and the acceptance runner.
// Each returns an empty string on success and a short diagnosis otherwise.

#include <random>
#include <string>

#include "simpade/adjrow.hpp"
#include "simpade/appbasis.hpp"
#include "simpade/oracle.hpp"
#include "simpade/solver.hpp"
#include "support/fixtures.hpp"

namespace simpade::testing {

// Codimension of the order-d approximant module of A, read off as the rank of
// the linear map (v mod x^d) -> (v A mod x^d) on coefficient vectors.
inline size_t approximant_codimension(const PolyMatrix& a, size_t d) {
  const size_t m = a.rows(), n = a.cols();
  ConstMatrix map(a.field(), m * d, n * d);
  for (size_t i = 0; i < m; ++i)
    for (size_t k = 0; k < d; ++k)  // basis vector x^k e_i
      for (size_t j = 0; j < n; ++j)
        for (size_t t = 0; t + k < d; ++t) map(i * d + k, j * d + t + k) = a(i, j).coeff(t);
  return map.rank();
}

inline std::string check_approximant_basis(const ApproximantBasis& r, const PolyMatrix& a,
                                           size_t d, const Shift& s) {
  const size_t m = a.rows();
  if (r.basis.rows() != m || r.basis.cols() != m) return "basis has wrong dimensions";
  if (!mat_mul(r.basis, a).truncated(d).is_zero()) return "F*A is not 0 mod x^d";
  const int64_t dexp = monomial_exponent(m <= 5 ? cofactor_det(r.basis)
                                                : polynomial_determinant(r.basis));
  if (dexp < 0) return "det F is not a monic power of x";
  if (static_cast<size_t>(dexp) > m * d) return "D exceeds m*d";
  if (static_cast<size_t>(dexp) != approximant_codimension(a, d))
    return "D differs from the codimension of the approximant module";
  if (!is_row_reduced(r.basis, s)) return "F is not s-row reduced";
  if (r.degrees != shifted_row_degrees(r.basis, s)) return "reported degrees are wrong";
  if (r.order != d || r.shift != s) return "order/shift not echoed";
  return {};
}

// Two-stage computation on a column split of A versus a one-shot basis.
inline std::string check_pipeline(const PolyMatrix& a, size_t split, size_t d,
                                  const Shift& s) {
  const PolyMatrix a1 = a.select_cols(0, split), a2 = a.select_cols(split, a.cols());
  const ApproximantBasis f1 = pm_basis(d, a1, s);
  const PolyMatrix residual = mat_mul(f1.basis, a2).truncated(d);
  const ApproximantBasis f2 = pm_basis(d, residual, f1.degrees);
  const PolyMatrix prod = mat_mul(f2.basis, f1.basis);
  if (shifted_row_degrees(prod, s) != f2.degrees) return "rowdeg_s(F2 F1) != delta2";
  if (popov_canonical(prod, s) != popov_basis(d, a, s).basis)
    return "F2 F1 spans a different module than the one-shot basis";
  return {};
}

// Same as above but keeping only negative-degree rows after the first stage.
inline std::string check_pruned_pipeline(const PolyMatrix& a, size_t split, size_t d,
                                         const Shift& s) {
  const PolyMatrix a1 = a.select_cols(0, split), a2 = a.select_cols(split, a.cols());
  const NegativePart n1 = neg_min_basis(d, a1, s);
  const NegativePart whole = neg_min_basis(d, a, s);
  if (n1.basis.rows() == 0)
    return whole.basis.rows() == 0 ? std::string{} : "pruned pipeline lost rows";
  const NegativePart n2 = neg_min_basis(d, mat_mul(n1.basis, a2).truncated(d), n1.degrees);
  const PolyMatrix prod = mat_mul(n2.basis, n1.basis);
  if (prod.rows() != whole.basis.rows()) return "pruned pipeline has a different row count";
  if (prod.rows() && shifted_row_degrees(prod, s) != n2.degrees) return "pruned degrees drift";
  if (!same_row_space(prod, s, whole.basis, s)) return "pruned pipeline row space differs";
  return {};
}

// popov_basis is a fixed point under unimodular perturbation.
inline std::string check_canonical(std::mt19937_64& rng, const PolyMatrix& a, size_t d,
                                   const Shift& s) {
  const ApproximantBasis p = popov_basis(d, a, s);
  if (!is_popov(p.basis, s)) return "popov_basis output is not s-Popov";
  const PolyMatrix u = random_unimodular(rng, a.field(), a.rows(), 12, 2);
  if (popov_canonical(mat_mul(u, pm_basis(d, a, s).basis), s) != p.basis)
    return "U*F does not canonicalise to popov_basis";
  if (popov_canonical(m_basis(d, a, s).basis, s) != p.basis)
    return "m_basis and pm_basis disagree";
  return {};
}

inline std::string check_adjoint(const PolyMatrix& f) {
  const AdjRowResult r = adjoint_first_row(f);
  if (r.row != cofactor_adjoint_first_row(f)) return "adjoint row differs from cofactor oracle";
  std::vector<Poly> target(f.rows(), Poly(f.field()));
  target[0] = Poly::x_power(f.field(), r.det_exponent);
  if (vec_mat_mul(r.row, f) != target) return "w*F != x^D e1";
  if (static_cast<int64_t>(r.det_exponent) != monomial_exponent(cofactor_det(f)))
    return "D differs from the cofactor determinant";
  return {};
}

inline std::string check_spec(const SolutionSpec& spec, const ProblemInstance& inst) {
  if (spec.lambdas.size() != spec.deltas.size()) return "lambda/delta length mismatch";
  for (int64_t dl : spec.deltas)
    if (dl >= 0) return "non-negative delta";
  if (!spec.lambdas.empty()) {
    const PolyMatrix c = complete(spec.lambdas, inst);
    const Shift negn = inst.negated_bounds();
    if (!is_row_reduced(c, negn)) return "completion is not (-N)-row reduced";
    if (shifted_row_degrees(c, negn) != spec.deltas) return "deltas do not match completion";
    for (size_t i = 0; i < c.rows(); ++i)
      if (!verify_solution(c.row(i), inst)) return "completion row is not a solution";
  }
  if (!spec_matches_oracle(spec, inst)) return "span differs from the oracle nullspace";
  return {};
}

inline ProblemInstance random_instance(std::mt19937_64& rng, const Field& f, size_t n,
                                       int64_t min_deg, int64_t max_deg, bool uniform) {
  std::vector<Poly> series, moduli;
  std::vector<int64_t> bounds(n + 1);
  const int64_t common = uniform_int(rng, min_deg, max_deg);
  int64_t gmax = 0;
  for (size_t i = 0; i < n; ++i) {
    const int64_t dg = uniform ? common : uniform_int(rng, min_deg, max_deg);
    Poly g = uniform ? Poly::x_power(f, static_cast<size_t>(dg))
                     : random_poly(rng, f, dg - 1) +
                           Poly::monomial(f, static_cast<uint64_t>(uniform_int(rng, 1, int64_t(f.modulus()) - 1)),
                                          static_cast<size_t>(dg));
    series.push_back(random_poly(rng, f, dg - 1));
    moduli.push_back(g);
    // Loose bounds half of the time so that many instances have solutions.
    bounds[i + 1] = uniform_int(rng, uniform_int(rng, 0, 1) ? dg / 2 : 0, dg);
    gmax = std::max(gmax, dg);
  }
  bounds[0] = uniform_int(rng, uniform_int(rng, 0, 1) ? (gmax + 1) / 2 : 1, gmax);
  return validate_instance(f, std::move(series), std::move(moduli), std::move(bounds));
}

}  // namespace simpade::testing
