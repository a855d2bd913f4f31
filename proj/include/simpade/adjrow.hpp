#pragma once

// First row of the adjoint of a nonsingular polynomial matrix whose
// determinant is a power of x, via truncated series lifting around x = 1.

#include <cstddef>
#include <vector>

#include "simpade/polymat.hpp"

namespace simpade {

struct AdjRowResult {
  std::vector<Poly> row;  // w with w*F = x^D e_1
  size_t det_exponent;    // D
};

class LiftingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// D with det F = x^D, read as the sum of the column degrees and checked
// (column-leading matrix, F(1), and an exact determinant for small inputs).
// Throws LiftingError if det F is not a power of x.
size_t det_power_of_x(const PolyMatrix& f);

// The polynomial row vector w with w*F = v, assuming deg w < precision.
// Throws LiftingError if F(1) is singular or if the truncated solution does
// not satisfy w*F = v exactly.
std::vector<Poly> lifted_vector_solve(const std::vector<Poly>& v,
                                      const PolyMatrix& f, size_t precision);

AdjRowResult adjoint_first_row(const PolyMatrix& f);

// Fraction-free (Bareiss) determinant over K[x].
Poly polynomial_determinant(const PolyMatrix& f);

}  // namespace simpade
