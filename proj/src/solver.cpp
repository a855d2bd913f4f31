#include "simpade/solver.hpp"

#include <algorithm>
#include <numeric>

#include "simpade/adjrow.hpp"
#include "simpade/appbasis.hpp"

namespace simpade {

int64_t ProblemInstance::max_modulus_degree() const {
  int64_t d = kNegInf;
  for (const auto& g : moduli) d = std::max(d, g.degree());
  return d;
}

Shift ProblemInstance::negated_bounds() const {
  Shift s(bounds.size());
  for (size_t i = 0; i < bounds.size(); ++i) s[i] = -bounds[i];
  return s;
}

std::optional<size_t> ProblemInstance::uniform_power_modulus() const {
  if (moduli.empty()) return std::nullopt;
  const Poly& first = moduli.front();
  if (first.is_zero() || first.leading() != 1 ||
      first.valuation() != first.size() - 1)
    return std::nullopt;
  for (const auto& g : moduli)
    if (!(g == first)) return std::nullopt;
  return first.size() - 1;
}

int64_t SolutionSpec::dimension() const {
  int64_t sum = 0;
  for (int64_t d : deltas) sum += -d;
  return sum;
}

ProblemInstance validate_instance(Field field, std::vector<Poly> series,
                                  std::vector<Poly> moduli,
                                  std::vector<int64_t> bounds) {
  const size_t n = series.size();
  if (n == 0) throw ValidationError("S", "at least one series is required");
  if (moduli.size() != n)
    throw ValidationError("g", "expected " + std::to_string(n) + " moduli, got " +
                                   std::to_string(moduli.size()));
  if (bounds.size() != n + 1)
    throw ValidationError("N", "expected " + std::to_string(n + 1) +
                                   " degree bounds, got " + std::to_string(bounds.size()));
  int64_t max_deg = kNegInf;
  for (size_t i = 0; i < n; ++i) {
    require_same_field(field, series[i].field());
    require_same_field(field, moduli[i].field());
    const std::string at = "[" + std::to_string(i) + "]";
    if (moduli[i].is_zero()) throw ValidationError("g" + at, "modulus is zero");
    if (series[i].degree() >= moduli[i].degree())
      throw ValidationError("S" + at, "degree " + std::to_string(series[i].degree()) +
                                          " is not below deg g = " +
                                          std::to_string(moduli[i].degree()));
    max_deg = std::max(max_deg, moduli[i].degree());
  }
  for (size_t i = 0; i <= n; ++i)
    if (bounds[i] < 0)
      throw ValidationError("N[" + std::to_string(i) + "]", "degree bound is negative");
  if (bounds[0] < 1) throw ValidationError("N[0]", "N_0 must be at least 1");
  if (bounds[0] > max_deg)
    throw ValidationError("N[0]", "N_0 = " + std::to_string(bounds[0]) +
                                      " exceeds max deg g = " + std::to_string(max_deg));
  for (size_t i = 1; i <= n; ++i)
    if (bounds[i] > moduli[i - 1].degree())
      throw ValidationError("N[" + std::to_string(i) + "]",
                            "N_" + std::to_string(i) + " = " + std::to_string(bounds[i]) +
                                " exceeds deg g = " + std::to_string(moduli[i - 1].degree()));
  return {field, std::move(series), std::move(moduli), std::move(bounds)};
}

ProblemInstance validate_instance(const RawInstance& raw) {
  if (!is_prime(raw.p) || raw.p >= Field::kMaxModulus)
    throw ValidationError("p", std::to_string(raw.p) + " is not a supported prime");
  const Field field(raw.p);
  auto to_polys = [&](const std::vector<std::vector<uint64_t>>& lists,
                      const std::string& name) {
    std::vector<Poly> out;
    for (size_t i = 0; i < lists.size(); ++i) {
      for (size_t j = 0; j < lists[i].size(); ++j)
        if (lists[i][j] >= raw.p)
          throw ValidationError(name + "[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                                "coefficient " + std::to_string(lists[i][j]) +
                                    " is not below p = " + std::to_string(raw.p));
      out.emplace_back(field, lists[i]);
    }
    return out;
  };
  return validate_instance(field, to_polys(raw.series, "S"), to_polys(raw.moduli, "g"),
                           raw.bounds);
}

PolyMatrix complete(const std::vector<Poly>& lambdas, const ProblemInstance& inst) {
  const size_t n = inst.size();
  PolyMatrix a(inst.field, lambdas.size(), n + 1);
  for (size_t j = 0; j < lambdas.size(); ++j) {
    a(j, 0) = lambdas[j];
    for (size_t i = 0; i < n; ++i)
      a(j, i + 1) = poly_rem(lambdas[j] * inst.series[i], inst.moduli[i]);
  }
  return a;
}

bool verify_solution(const std::vector<Poly>& v, const ProblemInstance& inst) {
  const size_t n = inst.size();
  if (v.size() != n + 1)
    throw DimensionError("solution vector has length " + std::to_string(v.size()) +
                         ", expected " + std::to_string(n + 1));
  if (std::all_of(v.begin(), v.end(), [](const Poly& e) { return e.is_zero(); }))
    return false;
  for (size_t i = 0; i <= n; ++i)
    if (v[i].degree() >= inst.bounds[i]) return false;
  for (size_t i = 0; i < n; ++i)
    if (!poly_rem(v[0] * inst.series[i] - v[i + 1], inst.moduli[i]).is_zero())
      return false;
  return true;
}

namespace {

SolutionSpec first_column(const NegativePart& neg) {
  SolutionSpec spec;
  for (size_t i = 0; i < neg.basis.rows(); ++i) spec.lambdas.push_back(neg.basis(i, 0));
  spec.deltas = neg.degrees;
  return spec;
}

size_t approximation_order(const ProblemInstance& inst) {
  return static_cast<size_t>(inst.bounds[0] + inst.max_modulus_degree() - 1);
}

}  // namespace

SolutionSpec direct_sim_pade(const ProblemInstance& inst) {
  const size_t n = inst.size();
  const Field& f = inst.field;
  const int64_t n0 = inst.bounds[0];
  // h = -(N | N_0 - 1, ..., N_0 - 1)
  Shift h = inst.negated_bounds();
  for (size_t i = 0; i < n; ++i) h.push_back(-(n0 - 1));
  // H = [-S ; I ; diag(g)]
  PolyMatrix big(f, 2 * n + 1, n);
  for (size_t i = 0; i < n; ++i) {
    big(0, i) = -inst.series[i];
    big(1 + i, i) = Poly::constant(f, 1);
    big(1 + n + i, i) = inst.moduli[i];
  }
  return first_column(neg_min_basis(approximation_order(inst), big, h));
}

SolutionSpec duality_sim_pade(const ProblemInstance& inst) {
  const auto order = inst.uniform_power_modulus();
  if (!order)
    throw PreconditionError("duality solver needs every modulus equal to x^d for one d");
  const size_t n = inst.size();
  const Field& f = inst.field;
  PolyMatrix column(f, n + 1, 1);
  column(0, 0) = Poly::constant(f, 1);
  for (size_t i = 0; i < n; ++i) column(i + 1, 0) = inst.series[i];

  const Shift shift(inst.bounds.begin(), inst.bounds.end());
  const ApproximantBasis g = popov_basis(*order, column, shift);
  // First column of adj(G^T) is the first row of adj(G).
  const AdjRowResult adj = adjoint_first_row(g.basis);

  const int64_t eta = std::accumulate(g.degrees.begin(), g.degrees.end(), int64_t{0});
  const int64_t bound_sum = std::accumulate(inst.bounds.begin(), inst.bounds.end(), int64_t{0});
  SolutionSpec spec;
  for (size_t i = 0; i <= n; ++i) {
    const int64_t delta = eta - bound_sum - g.degrees[i];
    if (delta >= 0) continue;
    spec.lambdas.push_back(adj.row[i]);
    spec.deltas.push_back(delta);
  }
  return spec;
}

ProblemInstance sub_instance(const ProblemInstance& inst, size_t from, size_t to) {
  ProblemInstance sub{inst.field, {}, {}, {inst.bounds[0]}};
  for (size_t i = from; i < to; ++i) {
    sub.series.push_back(inst.series[i]);
    sub.moduli.push_back(inst.moduli[i]);
    sub.bounds.push_back(inst.bounds[i + 1]);
  }
  return sub;
}

SolutionSpec recursive_sim_pade(const ProblemInstance& inst) {
  const size_t n = inst.size();
  if (n == 1) return direct_sim_pade(inst);
  const size_t split = (n + 1) / 2;
  const SolutionSpec left = recursive_sim_pade(sub_instance(inst, 0, split));
  const SolutionSpec right = recursive_sim_pade(sub_instance(inst, split, n));

  const Field& f = inst.field;
  const size_t k1 = left.count(), k2 = right.count();
  // R = [1 1 ; -lambda_1 0 ; 0 -lambda_2], r = (-N_0 | delta_1 | delta_2)
  PolyMatrix r_mat(f, 1 + k1 + k2, 2);
  r_mat(0, 0) = Poly::constant(f, 1);
  r_mat(0, 1) = Poly::constant(f, 1);
  for (size_t i = 0; i < k1; ++i) r_mat(1 + i, 0) = -left.lambdas[i];
  for (size_t i = 0; i < k2; ++i) r_mat(1 + k1 + i, 1) = -right.lambdas[i];
  Shift r{-inst.bounds[0]};
  r.insert(r.end(), left.deltas.begin(), left.deltas.end());
  r.insert(r.end(), right.deltas.begin(), right.deltas.end());

  return first_column(neg_min_basis(approximation_order(inst), r_mat, r));
}

}  // namespace simpade
