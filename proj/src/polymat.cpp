#include "simpade/polymat.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "ntt.hpp"

namespace simpade {

namespace {

void require_shift(size_t expected, const Shift& s) {
  if (s.size() != expected)
    throw DimensionError("shift has length " + std::to_string(s.size()) +
                         ", expected " + std::to_string(expected));
}

}  // namespace

// ---------------------------------------------------------- ConstMatrix

size_t ConstMatrix::rank() const {
  ConstMatrix m = *this;
  const Field& f = field_;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t piv = r;
    while (piv < rows_ && m(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    for (size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(piv, j));
    const uint64_t inv = f.inv(m(r, c));
    for (size_t i = r + 1; i < rows_; ++i) {
      if (m(i, c) == 0) continue;
      const uint64_t factor = f.mul(m(i, c), inv);
      for (size_t j = c; j < cols_; ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<uint64_t>> ConstMatrix::solve_left(
    const std::vector<uint64_t>& target) const {
  // Solve x*M = t, i.e. M^T x^T = t^T, by elimination on [M^T | t^T].
  const Field& f = field_;
  const size_t n = cols_, m = rows_;  // n equations, m unknowns
  std::vector<std::vector<uint64_t>> aug(n, std::vector<uint64_t>(m + 1, 0));
  for (size_t e = 0; e < n; ++e) {
    for (size_t u = 0; u < m; ++u) aug[e][u] = (*this)(u, e);
    aug[e][m] = e < target.size() ? target[e] : 0;
  }
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < m && r < n; ++c) {
    size_t piv = r;
    while (piv < n && aug[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(aug[r], aug[piv]);
    const uint64_t inv = f.inv(aug[r][c]);
    for (auto& v : aug[r]) v = f.mul(v, inv);
    for (size_t i = 0; i < n; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const uint64_t factor = aug[i][c];
      for (size_t j = 0; j <= m; ++j)
        aug[i][j] = f.sub(aug[i][j], f.mul(factor, aug[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < n; ++i)
    if (aug[i][m] != 0) return std::nullopt;
  std::vector<uint64_t> x(m, 0);
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][m];
  return x;
}

// ----------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(Field field, size_t rows, size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, Poly(field)) {}

PolyMatrix::PolyMatrix(Field field, size_t cols,
                       std::vector<std::vector<Poly>> rows)
    : field_(field), rows_(rows.size()), cols_(cols) {
  a_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix rows");
    for (auto& e : r) {
      require_same_field(field_, e.field());
      a_.push_back(std::move(e));
    }
  }
}

PolyMatrix PolyMatrix::identity(Field field, size_t n) {
  PolyMatrix m(field, n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(field, 1);
  return m;
}

std::vector<Poly> PolyMatrix::row(size_t i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void PolyMatrix::set_row(size_t i, const std::vector<Poly>& r) {
  if (r.size() != cols_) throw DimensionError("row length mismatch");
  for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
}

std::vector<Poly> PolyMatrix::column(size_t j) const {
  std::vector<Poly> c;
  c.reserve(rows_);
  for (size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return c;
}

int64_t PolyMatrix::degree() const {
  int64_t d = kNegInf;
  for (const auto& e : a_) d = std::max(d, e.degree());
  return d;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Poly& e) { return e.is_zero(); });
}

PolyMatrix PolyMatrix::truncated(size_t k) const {
  PolyMatrix m = *this;
  for (auto& e : m.a_) e = e.truncated(k);
  return m;
}

PolyMatrix PolyMatrix::shifted_down(size_t k) const {
  PolyMatrix m = *this;
  for (auto& e : m.a_) e = e.shifted_down(k);
  return m;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix m(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<size_t>& idx) const {
  PolyMatrix m(field_, idx.size(), cols_);
  for (size_t r = 0; r < idx.size(); ++r)
    for (size_t j = 0; j < cols_; ++j) m(r, j) = (*this)(idx[r], j);
  return m;
}

PolyMatrix PolyMatrix::select_cols(size_t from, size_t to) const {
  PolyMatrix m(field_, rows_, to - from);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = from; j < to; ++j) m(i, j - from) = (*this)(i, j);
  return m;
}

PolyMatrix PolyMatrix::hcat(const PolyMatrix& right) const {
  if (rows_ != right.rows_) throw DimensionError("hcat row count mismatch");
  PolyMatrix m(field_, rows_, cols_ + right.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
  }
  return m;
}

PolyMatrix PolyMatrix::vcat(const PolyMatrix& below) const {
  if (cols_ != below.cols_) throw DimensionError("vcat column count mismatch");
  PolyMatrix m = *this;
  m.rows_ += below.rows_;
  m.a_.insert(m.a_.end(), below.a_.begin(), below.a_.end());
  return m;
}

void PolyMatrix::add_row_multiple(size_t i, size_t j, uint64_t c, size_t k) {
  for (size_t col = 0; col < cols_; ++col)
    (*this)(i, col).add_scaled_shifted((*this)(j, col), c, k);
}

void PolyMatrix::add_row_multiple(size_t i, size_t j, const Poly& q) {
  if (q.is_zero()) return;
  for (size_t col = 0; col < cols_; ++col) {
    const Poly& src = (*this)(j, col);
    if (src.is_zero()) continue;
    (*this)(i, col) += q * src;
  }
}

void PolyMatrix::scale_row(size_t i, uint64_t c) {
  for (size_t col = 0; col < cols_; ++col) (*this)(i, col) = (*this)(i, col).scaled(c);
}

void PolyMatrix::shift_row_up(size_t i, size_t k) {
  for (size_t col = 0; col < cols_; ++col)
    (*this)(i, col) = (*this)(i, col).shifted_up(k);
}

void PolyMatrix::swap_rows(size_t i, size_t j) {
  if (i == j) return;
  for (size_t col = 0; col < cols_; ++col) std::swap((*this)(i, col), (*this)(j, col));
}

// ------------------------------------------------------ degree queries

int64_t shifted_degree(const std::vector<Poly>& v, const Shift& s) {
  require_shift(v.size(), s);
  int64_t d = kNegInf;
  for (size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    d = std::max(d, v[j].degree() + s[j]);
  }
  return d;
}

RowDegrees shifted_row_degrees(const PolyMatrix& a, const Shift& s) {
  require_shift(a.cols(), s);
  RowDegrees out(a.rows(), kNegInf);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) out[i] = std::max(out[i], a(i, j).degree() + s[j]);
  return out;
}

namespace {

// Coefficient of the row-vector term sitting at shifted degree d in column j.
uint64_t leading_coefficient_at(const Poly& e, int64_t d, int64_t sj) {
  const int64_t k = d - sj;
  if (k < 0) return 0;
  return e.coeff(static_cast<size_t>(k));
}

std::vector<uint64_t> leading_vector(const std::vector<Poly>& v, int64_t d,
                                     const Shift& s) {
  std::vector<uint64_t> out(v.size());
  for (size_t j = 0; j < v.size(); ++j) out[j] = leading_coefficient_at(v[j], d, s[j]);
  return out;
}

}  // namespace

ConstMatrix shifted_leading_matrix(const PolyMatrix& a, const Shift& s) {
  const RowDegrees d = shifted_row_degrees(a, s);
  ConstMatrix lm(a.field(), a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    if (d[i] == kNegInf)
      throw std::domain_error("leading matrix of a zero row (row " +
                              std::to_string(i) + ")");
    for (size_t j = 0; j < a.cols(); ++j)
      lm(i, j) = leading_coefficient_at(a(i, j), d[i], s[j]);
  }
  return lm;
}

bool is_row_reduced(const PolyMatrix& a, const Shift& s) {
  require_shift(a.cols(), s);
  const RowDegrees d = shifted_row_degrees(a, s);
  if (std::any_of(d.begin(), d.end(), [](int64_t v) { return v == kNegInf; }))
    return false;
  if (a.rows() > a.cols()) return false;
  return shifted_leading_matrix(a, s).rank() == a.rows();
}

bool is_popov(const PolyMatrix& a, const Shift& s) {
  if (a.rows() != a.cols()) throw DimensionError("is_popov needs a square matrix");
  require_shift(a.cols(), s);
  const RowDegrees d = shifted_row_degrees(a, s);
  if (std::any_of(d.begin(), d.end(), [](int64_t v) { return v == kNegInf; }))
    return false;
  const ConstMatrix lm = shifted_leading_matrix(a, s);
  const size_t n = a.rows();
  for (size_t i = 0; i < n; ++i) {
    if (lm(i, i) != 1) return false;
    for (size_t j = i + 1; j < n; ++j)
      if (lm(i, j) != 0) return false;
  }
  for (size_t j = 0; j < n; ++j) {
    const int64_t dj = a(j, j).degree();
    for (size_t i = 0; i < n; ++i)
      if (i != j && a(i, j).degree() >= dj) return false;
  }
  return true;
}

// ------------------------------------------------------- multiplication

namespace {

// Below this operand length the schoolbook/Karatsuba entry products win.
constexpr size_t kTransformCutoff = 48;

// Coefficients [from, to) of a*b, computed with cyclic convolutions of
// length `len`. Exact when every product coefficient of index >= len + from
// is zero, i.e. wrap-around only lands below `from`.
PolyMatrix mat_mul_transform(const PolyMatrix& a, const PolyMatrix& b, size_t len,
                             int primes, size_t from, size_t to) {
  namespace ntt = detail::ntt;
  const size_t n = a.rows(), inner = a.cols(), m = b.cols();
  std::vector<std::array<std::vector<uint32_t>, ntt::kNumPrimes>> out(n * m);
  for (int w = 0; w < primes; ++w) {
    std::vector<std::vector<uint32_t>> fa(n * inner), fb(inner * m);
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < inner; ++k) {
        if (a(i, k).is_zero()) continue;
        fa[i * inner + k] = ntt::load(a(i, k).coeffs(), len, w);
        ntt::forward(fa[i * inner + k], w);
      }
    for (size_t k = 0; k < inner; ++k)
      for (size_t j = 0; j < m; ++j) {
        if (b(k, j).is_zero()) continue;
        fb[k * m + j] = ntt::load(b(k, j).coeffs(), len, w);
        ntt::forward(fb[k * m + j], w);
      }
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < m; ++j) {
        std::vector<uint32_t> acc;
        for (size_t k = 0; k < inner; ++k) {
          const auto& x = fa[i * inner + k];
          const auto& y = fb[k * m + j];
          if (x.empty() || y.empty()) continue;
          if (acc.empty()) acc.assign(len, 0);
          ntt::multiply_accumulate(acc, x, y, w);
        }
        if (!acc.empty()) ntt::inverse(acc, w);
        out[i * m + j][w] = std::move(acc);
      }
  }
  PolyMatrix c(a.field(), n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      auto& res = out[i * m + j];
      if (res[0].empty()) continue;
      std::vector<uint64_t> coeffs = ntt::reconstruct(res, primes, to, a.field());
      coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(from));
      c(i, j) = Poly(a.field(), std::move(coeffs));
    }
  return c;
}

}  // namespace

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const int64_t da = a.degree(), db = b.degree();
  if (da == kNegInf || db == kNegInf) return PolyMatrix(a.field(), a.rows(), b.cols());
  const size_t la = static_cast<size_t>(da) + 1, lb = static_cast<size_t>(db) + 1;
  const size_t result_len = la + lb - 1;
  if (std::min(la, lb) >= kTransformCutoff) {
    const int primes =
        detail::ntt::primes_needed(a.field().modulus(), std::min(la, lb), a.cols(), result_len);
    if (primes)
      return mat_mul_transform(a, b, detail::ntt::transform_length(result_len), primes, 0,
                               result_len);
  }
  PolyMatrix c(a.field(), a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const Poly& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        const Poly& y = b(k, j);
        if (y.is_zero()) continue;
        c(i, j) += x * y;
      }
    }
  return c;
}

PolyMatrix mat_mul_middle(const PolyMatrix& a, const PolyMatrix& b, size_t from,
                          size_t to) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) throw DimensionError("mat_mul_middle: inner dimensions differ");
  if (to <= from) return PolyMatrix(a.field(), a.rows(), b.cols());
  const int64_t da = a.degree(), db = b.degree();
  if (da != kNegInf && db != kNegInf) {
    const size_t la = static_cast<size_t>(da) + 1, lb = static_cast<size_t>(db) + 1;
    const size_t result_len = la + lb - 1;
    // Cyclic length L is safe when result_len <= L + from; both operands
    // must also fit.
    const size_t cyclic =
        std::max({to, result_len > from ? result_len - from : 0, la, lb});
    if (std::min(la, lb) >= kTransformCutoff && to <= result_len) {
      const int primes =
          detail::ntt::primes_needed(a.field().modulus(), std::min(la, lb), a.cols(), cyclic);
      if (primes)
        return mat_mul_transform(a, b, detail::ntt::transform_length(cyclic), primes, from, to);
    }
  }
  return mat_mul(a, b).shifted_down(from).truncated(to - from);
}

std::vector<Poly> vec_mat_mul(const std::vector<Poly>& v, const PolyMatrix& a) {
  PolyMatrix row(a.field(), a.rows(), {v});
  return mat_mul(row, a).row(0);
}

// ------------------------------------------------------- row reduction

bool row_space_membership(const std::vector<Poly>& v, const PolyMatrix& a,
                          const Shift& s) {
  if (v.size() != a.cols()) throw DimensionError("membership: vector length mismatch");
  require_shift(a.cols(), s);
  if (!is_row_reduced(a, s) && a.rows() > 0)
    throw std::domain_error("membership: matrix is not row reduced under the given shift");
  const RowDegrees rd = shifted_row_degrees(a, s);
  const ConstMatrix lm = a.rows() > 0 ? shifted_leading_matrix(a, s)
                                      : ConstMatrix(a.field(), 0, a.cols());
  const int64_t floor_deg =
      a.rows() > 0 ? *std::min_element(rd.begin(), rd.end()) : kNegInf;
  std::vector<Poly> w = v;
  for (;;) {
    const int64_t d = shifted_degree(w, s);
    if (d == kNegInf) return true;
    if (a.rows() == 0 || d < floor_deg) return false;
    // Rows that can contribute at shifted degree d.
    std::vector<size_t> usable;
    for (size_t i = 0; i < a.rows(); ++i)
      if (rd[i] <= d) usable.push_back(i);
    ConstMatrix sub(a.field(), usable.size(), a.cols());
    for (size_t r = 0; r < usable.size(); ++r)
      for (size_t j = 0; j < a.cols(); ++j) sub(r, j) = lm(usable[r], j);
    const auto coeffs = sub.solve_left(leading_vector(w, d, s));
    if (!coeffs) return false;
    for (size_t r = 0; r < usable.size(); ++r) {
      const uint64_t c = (*coeffs)[r];
      if (c == 0) continue;
      const size_t i = usable[r];
      const size_t k = static_cast<size_t>(d - rd[i]);
      const uint64_t neg = a.field().neg(c);
      for (size_t j = 0; j < a.cols(); ++j) w[j].add_scaled_shifted(a(i, j), neg, k);
    }
  }
}

bool same_row_space(const PolyMatrix& a, const Shift& sa, const PolyMatrix& b,
                    const Shift& sb) {
  if (a.cols() != b.cols()) return false;
  for (size_t i = 0; i < a.rows(); ++i)
    if (!row_space_membership(a.row(i), b, sb)) return false;
  for (size_t i = 0; i < b.rows(); ++i)
    if (!row_space_membership(b.row(i), a, sa)) return false;
  return true;
}

int64_t shifted_pivot(const PolyMatrix& a, size_t i, const Shift& s) {
  int64_t best = kNegInf;
  int64_t piv = -1;
  for (size_t j = 0; j < a.cols(); ++j) {
    if (a(i, j).is_zero()) continue;
    const int64_t d = a(i, j).degree() + s[j];
    if (d >= best) {
      best = d;
      piv = static_cast<int64_t>(j);
    }
  }
  return piv;
}

PolyMatrix weak_popov(const PolyMatrix& a, const Shift& s) {
  require_shift(a.cols(), s);
  PolyMatrix w = a;
  const size_t n = w.rows();
  std::vector<int64_t> piv(n), rdeg(n);
  auto refresh = [&](size_t i) {
    piv[i] = shifted_pivot(w, i, s);
    if (piv[i] < 0)
      throw std::domain_error("matrix does not have full row rank");
    rdeg[i] = w(i, static_cast<size_t>(piv[i])).degree() + s[static_cast<size_t>(piv[i])];
  };
  for (size_t i = 0; i < n; ++i) refresh(i);
  for (;;) {
    // Find a pivot collision. The row reduced is the one of largest shifted
    // degree (lowest index on ties); the reducer is the other colliding row
    // of smallest shifted degree (lowest index on ties).
    bool found = false;
    size_t target = 0, reducer = 0;
    for (size_t i = 0; i < n && !found; ++i) {
      for (size_t k = i + 1; k < n; ++k) {
        if (piv[k] != piv[i]) continue;
        std::vector<size_t> group;
        for (size_t r = 0; r < n; ++r)
          if (piv[r] == piv[i]) group.push_back(r);
        target = group[0];
        for (size_t r : group)
          if (rdeg[r] > rdeg[target]) target = r;
        reducer = target == group[0] ? group[1] : group[0];
        for (size_t r : group)
          if (r != target && rdeg[r] < rdeg[reducer]) reducer = r;
        found = true;
        break;
      }
    }
    if (!found) break;
    const size_t j = static_cast<size_t>(piv[target]);
    const Field& f = w.field();
    const uint64_t c = f.neg(f.mul(w(target, j).leading(), f.inv(w(reducer, j).leading())));
    const size_t e = static_cast<size_t>(rdeg[target] - rdeg[reducer]);
    w.add_row_multiple(target, reducer, c, e);
    refresh(target);
  }
  return w;
}

PolyMatrix popov_canonical(const PolyMatrix& a, const Shift& s) {
  if (a.rows() != a.cols()) throw DimensionError("popov_canonical needs a square matrix");
  require_shift(a.cols(), s);
  const size_t n = a.rows();
  PolyMatrix w = weak_popov(a, s);
  // Order rows by pivot column.
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[static_cast<size_t>(shifted_pivot(w, i, s))] = i;
  PolyMatrix p = w.select_rows(order);
  const Field& f = p.field();
  for (size_t i = 0; i < n; ++i) p.scale_row(i, f.inv(p(i, i).leading()));
  // Reduce off-diagonal entries modulo the diagonal entry of their column.
  // Every step cancels terms against a pivot and only introduces terms that
  // are smaller in the shifted term order, so the sweeps terminate.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (i == j || p(i, j).degree() < p(j, j).degree()) continue;
        Poly q = poly_divrem(p(i, j), p(j, j)).first;
        p.add_row_multiple(i, j, -q);
        changed = true;
      }
    }
  }
  return p;
}

}  // namespace simpade
