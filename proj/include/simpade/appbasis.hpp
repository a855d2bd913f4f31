#pragma once

// Shifted minimal approximant bases (order bases). For A with n rows and
// order d, an approximant is a row p with p*A = 0 mod x^d; an s-minimal
// approximant basis is an s-row reduced n x n matrix whose rows generate
// all of them.

#include <cstddef>

#include "simpade/polymat.hpp"

namespace simpade {

struct ApproximantBasis {
  PolyMatrix basis;     // n x n, nonsingular, det = x^D
  RowDegrees degrees;   // shifted_row_degrees(basis, shift)
  size_t order;
  Shift shift;
};

// Rows of an s-minimal approximant basis with negative s-degree. May have
// zero rows.
struct NegativePart {
  PolyMatrix basis;
  RowDegrees degrees;
};

inline constexpr size_t kDefaultBaseCaseOrder = 32;

// Iterative construction, one order at a time.
ApproximantBasis m_basis(size_t order, const PolyMatrix& a, const Shift& s);

// Divide and conquer on the order; orders at or below `base_case` are
// delegated to m_basis.
ApproximantBasis pm_basis(size_t order, const PolyMatrix& a, const Shift& s,
                          size_t base_case = kDefaultBaseCaseOrder);

// As pm_basis, with the basis normalized to s-Popov form.
ApproximantBasis popov_basis(size_t order, const PolyMatrix& a, const Shift& s);

// Negative part of popov_basis, in its row order.
NegativePart neg_min_basis(size_t order, const PolyMatrix& a, const Shift& s);

// Rows of `basis` with negative degree.
NegativePart negative_rows(const PolyMatrix& basis, const RowDegrees& degrees);

}  // namespace simpade
