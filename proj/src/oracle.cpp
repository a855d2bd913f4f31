#include "simpade/oracle.hpp"

#include <algorithm>
#include <string>

namespace simpade {

namespace {

using u128 = unsigned __int128;
using Row = std::vector<uint64_t>;

struct Mod {
  uint64_t p;
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t mul(uint64_t a, uint64_t b) const { return static_cast<uint64_t>(u128{a} * b % p); }
  uint64_t inv(uint64_t a) const {
    uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

Row raw(const Poly& a) { return a.coeffs(); }

// Coefficient list of x*t mod g, for deg t < deg g (t padded to deg g).
void times_x_mod(const Mod& m, Row& t, const Row& g) {
  const size_t dg = g.size() - 1;
  const uint64_t top = t[dg - 1];
  for (size_t i = dg - 1; i > 0; --i) t[i] = t[i - 1];
  t[0] = 0;
  if (top == 0) return;
  const uint64_t c = m.mul(top, m.inv(g[dg]));
  for (size_t i = 0; i < dg; ++i) t[i] = m.sub(t[i], m.mul(c, g[i]));
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(const Mod& m, std::vector<Row>& rows, size_t cols) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const uint64_t inv = m.inv(rows[r][c]);
    for (auto& v : rows[r]) v = m.mul(v, inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const uint64_t factor = rows[i][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] = m.sub(rows[i][j], m.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank_of(const Mod& m, std::vector<Row> rows, size_t cols) {
  return rref(m, rows, cols).size();
}

size_t cell_count(const ProblemInstance& inst) {
  const size_t n0 = static_cast<size_t>(inst.bounds[0]);
  const size_t dmax = static_cast<size_t>(std::max<int64_t>(inst.max_modulus_degree(), 1));
  return n0 * (inst.size() + 1) * dmax;
}

}  // namespace

bool oracle_feasible(const ProblemInstance& inst) {
  return cell_count(inst) <= kOracleCellLimit;
}

SolutionSpace oracle_solution_space(const ProblemInstance& inst) {
  if (!oracle_feasible(inst))
    throw OracleSizeError("oracle size guard: " + std::to_string(cell_count(inst)) +
                          " cells exceed " + std::to_string(kOracleCellLimit));
  const Mod m{inst.field.modulus()};
  const size_t n0 = static_cast<size_t>(inst.bounds[0]);

  // constraints[j] = the coefficients that must vanish, as a function of
  // lambda = x^j. Built as a column list per unknown.
  std::vector<Row> by_unknown(n0);
  for (size_t i = 0; i < inst.size(); ++i) {
    const Row g = raw(inst.moduli[i]);
    const size_t dg = g.size() - 1;
    if (dg == 0) continue;
    Row t = raw(inst.series[i]);
    t.resize(dg, 0);
    const size_t lo = static_cast<size_t>(std::max<int64_t>(inst.bounds[i + 1], 0));
    for (size_t j = 0; j < n0; ++j) {
      if (j > 0) times_x_mod(m, t, g);
      for (size_t c = lo; c < dg; ++c) by_unknown[j].push_back(t[c]);
    }
  }
  const size_t constraints = by_unknown.empty() ? 0 : by_unknown[0].size();

  // Solve c * M = 0 where row j of M is by_unknown[j]: nullspace of M^T.
  std::vector<Row> system(constraints, Row(n0, 0));
  for (size_t j = 0; j < n0; ++j)
    for (size_t c = 0; c < constraints; ++c) system[c][j] = by_unknown[j][c];
  const std::vector<size_t> pivots = rref(m, system, n0);

  SolutionSpace space{inst.field.modulus(), n0, {}};
  std::vector<bool> is_pivot(n0, false);
  for (size_t c : pivots) is_pivot[c] = true;
  for (size_t free = 0; free < n0; ++free) {
    if (is_pivot[free]) continue;
    Row v(n0, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = m.sub(0, system[r][free]);
    space.basis.push_back(std::move(v));
  }
  return space;
}

bool spec_matches_oracle(const SolutionSpec& spec, const ProblemInstance& inst) {
  const SolutionSpace space = oracle_solution_space(inst);
  const Mod m{space.p};
  const size_t n0 = space.unknowns;
  if (spec.lambdas.size() != spec.deltas.size()) return false;

  std::vector<Row> expanded;
  for (size_t i = 0; i < spec.lambdas.size(); ++i) {
    if (spec.deltas[i] >= 0) return false;
    const Row lam = raw(spec.lambdas[i]);
    for (int64_t j = 0; j < -spec.deltas[i]; ++j) {
      if (lam.size() + static_cast<size_t>(j) > n0) return false;
      Row v(n0, 0);
      for (size_t c = 0; c < lam.size(); ++c) v[c + static_cast<size_t>(j)] = lam[c];
      expanded.push_back(std::move(v));
    }
  }
  const size_t dim = space.dim();
  if (expanded.size() != dim) return false;
  if (rank_of(m, expanded, n0) != dim) return false;
  std::vector<Row> both = expanded;
  both.insert(both.end(), space.basis.begin(), space.basis.end());
  return rank_of(m, both, n0) == dim;
}

}  // namespace simpade
