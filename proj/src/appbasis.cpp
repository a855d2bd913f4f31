#include "simpade/appbasis.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace simpade {

namespace {

void check_input(const PolyMatrix& a, const Shift& s) {
  if (s.size() != a.rows())
    throw DimensionError("approximant basis: shift has length " +
                         std::to_string(s.size()) + " but the input has " +
                         std::to_string(a.rows()) + " rows");
}

}  // namespace

ApproximantBasis m_basis(size_t order, const PolyMatrix& a, const Shift& s) {
  check_input(a, s);
  const Field& f = a.field();
  const size_t n = a.rows(), m = a.cols();
  PolyMatrix basis = PolyMatrix::identity(f, n);
  // residual = basis * a mod x^order
  PolyMatrix residual = a.truncated(order);
  RowDegrees rdeg = s;

  std::vector<size_t> rows_by_degree(n);
  std::vector<uint64_t> coeffs(n * m);
  for (size_t k = 0; k < order; ++k) {
    for (size_t i = 0; i < n; ++i)
      for (size_t c = 0; c < m; ++c) coeffs[i * m + c] = residual(i, c).coeff(k);

    std::iota(rows_by_degree.begin(), rows_by_degree.end(), 0);
    std::stable_sort(rows_by_degree.begin(), rows_by_degree.end(),
                     [&](size_t x, size_t y) { return rdeg[x] < rdeg[y]; });

    // Gaussian elimination on the constant residual; rows earlier in
    // rows_by_degree have no larger shifted degree, so eliminating later
    // rows against them never raises a degree.
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, column)
    for (size_t r : rows_by_degree) {
      for (const auto& [pr, pc] : pivots) {
        const uint64_t v = coeffs[r * m + pc];
        if (v == 0) continue;
        const uint64_t factor = f.neg(f.mul(v, f.inv(coeffs[pr * m + pc])));
        for (size_t c = 0; c < m; ++c)
          coeffs[r * m + c] = f.add(coeffs[r * m + c], f.mul(factor, coeffs[pr * m + c]));
        basis.add_row_multiple(r, pr, factor, 0);
        residual.add_row_multiple(r, pr, factor, 0);
      }
      for (size_t c = 0; c < m; ++c) {
        if (coeffs[r * m + c] != 0) {
          pivots.emplace_back(r, c);
          break;
        }
      }
    }
    for (const auto& [pr, pc] : pivots) {
      basis.shift_row_up(pr, 1);
      for (size_t c = 0; c < m; ++c)
        residual(pr, c) = residual(pr, c).shifted_up(1).truncated(order);
      ++rdeg[pr];
    }
  }
  return {std::move(basis), std::move(rdeg), order, s};
}

ApproximantBasis pm_basis(size_t order, const PolyMatrix& a, const Shift& s,
                          size_t base_case) {
  check_input(a, s);
  if (order <= std::max<size_t>(base_case, 1)) return m_basis(order, a, s);
  const size_t first = (order + 1) / 2;
  const PolyMatrix input = a.truncated(order);
  ApproximantBasis lower = pm_basis(first, input.truncated(first), s, base_case);
  const PolyMatrix residual = mat_mul_middle(lower.basis, input, first, order);
  ApproximantBasis upper = pm_basis(order - first, residual, lower.degrees, base_case);
  return {mat_mul(upper.basis, lower.basis), std::move(upper.degrees), order, s};
}

ApproximantBasis popov_basis(size_t order, const PolyMatrix& a, const Shift& s) {
  ApproximantBasis r = pm_basis(order, a, s);
  r.basis = popov_canonical(r.basis, s);
  r.degrees = shifted_row_degrees(r.basis, s);
  return r;
}

NegativePart negative_rows(const PolyMatrix& basis, const RowDegrees& degrees) {
  std::vector<size_t> keep;
  RowDegrees kept;
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 0) {
      keep.push_back(i);
      kept.push_back(degrees[i]);
    }
  }
  return {basis.select_rows(keep), std::move(kept)};
}

NegativePart neg_min_basis(size_t order, const PolyMatrix& a, const Shift& s) {
  const ApproximantBasis r = pm_basis(order, a, s);
  return negative_rows(r.basis, r.degrees);
}

}  // namespace simpade
