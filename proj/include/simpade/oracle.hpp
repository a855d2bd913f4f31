#pragma once

// Brute-force reference solver. The solutions lambda (deg < N_0) form a
// GF(p)-vector space cut out by linear conditions on lambda's coefficients:
// the coefficients of rem(lambda S_i, g_i) at degrees N_i .. deg g_i - 1
// must vanish. This module computes that space by dense elimination and
// shares no arithmetic with the approximant-basis solvers.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "simpade/solver.hpp"

namespace simpade {

inline constexpr size_t kOracleCellLimit = 1'000'000;

class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct SolutionSpace {
  uint64_t p = 0;
  size_t unknowns = 0;  // N_0
  // Coefficient vectors of lambda, ascending, each of length `unknowns`.
  std::vector<std::vector<uint64_t>> basis;
  size_t dim() const { return basis.size(); }
};

// Whether the instance is small enough for the oracle.
bool oracle_feasible(const ProblemInstance& inst);

// Throws OracleSizeError above kOracleCellLimit matrix cells.
SolutionSpace oracle_solution_space(const ProblemInstance& inst);

// True iff the GF(p)-span of {x^j lambda_i : 0 <= j < -delta_i} equals the
// oracle space. Throws OracleSizeError like oracle_solution_space.
bool spec_matches_oracle(const SolutionSpec& spec, const ProblemInstance& inst);

}  // namespace simpade
