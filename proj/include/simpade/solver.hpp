#pragma once

// Simultaneous Pade approximation: given S_1..S_n, moduli g_1..g_n and
// degree bounds (N_0; N_1..N_n), find all (lambda, phi_1..phi_n) with
// lambda*S_i = phi_i mod g_i, deg lambda < N_0 and deg phi_i < N_i.
//
// Solvers return a SolutionSpec: the lambdas of a (-N)-row reduced basis of
// all solutions, with the (-N)-degrees of their completions.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "simpade/polymat.hpp"

namespace simpade {

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// A solver was called on an instance outside its domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unvalidated instance data, coefficients in ascending order.
struct RawInstance {
  uint64_t p = 0;
  std::vector<std::vector<uint64_t>> series;
  std::vector<std::vector<uint64_t>> moduli;
  std::vector<int64_t> bounds;
};

struct ProblemInstance {
  Field field;
  std::vector<Poly> series;   // S_i, deg S_i < deg g_i
  std::vector<Poly> moduli;   // g_i
  std::vector<int64_t> bounds;  // N_0, N_1, ..., N_n

  size_t size() const { return series.size(); }
  int64_t max_modulus_degree() const;
  // -N, the shift under which solutions have negative degree.
  Shift negated_bounds() const;
  // d if every modulus is exactly x^d.
  std::optional<size_t> uniform_power_modulus() const;
};

struct SolutionSpec {
  std::vector<Poly> lambdas;
  std::vector<int64_t> deltas;

  size_t count() const { return lambdas.size(); }
  int64_t dimension() const;  // sum of -delta_i
};

ProblemInstance validate_instance(const RawInstance& raw);
// Same checks on already-typed data.
ProblemInstance validate_instance(Field field, std::vector<Poly> series,
                                  std::vector<Poly> moduli,
                                  std::vector<int64_t> bounds);

// Rows [lambda_j | rem(lambda_j S_1, g_1) | ... | rem(lambda_j S_n, g_n)].
PolyMatrix complete(const std::vector<Poly>& lambdas, const ProblemInstance& inst);

bool verify_solution(const std::vector<Poly>& v, const ProblemInstance& inst);

SolutionSpec direct_sim_pade(const ProblemInstance& inst);

// Requires g_1 = ... = g_n = x^d (PreconditionError otherwise).
SolutionSpec duality_sim_pade(const ProblemInstance& inst);

SolutionSpec recursive_sim_pade(const ProblemInstance& inst);

// Sub-instance on series [from, to), keeping N_0.
ProblemInstance sub_instance(const ProblemInstance& inst, size_t from, size_t to);

}  // namespace simpade
