#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "simpade/ffpoly.hpp"

namespace simpade {

// Integer column weights. Also used for the shifted row degrees returned by
// the queries below, where kNegInf marks a zero row.
using Shift = std::vector<int64_t>;
using RowDegrees = std::vector<int64_t>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense matrix over GF(p).
class ConstMatrix {
 public:
  ConstMatrix(Field field, size_t rows, size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  const Field& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint64_t& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  uint64_t operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  size_t rank() const;
  // Some x with x * (*this) = target, or nullopt.
  std::optional<std::vector<uint64_t>> solve_left(
      const std::vector<uint64_t>& target) const;

  bool operator==(const ConstMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           a_ == o.a_;
  }

 private:
  Field field_;
  size_t rows_, cols_;
  std::vector<uint64_t> a_;
};

class PolyMatrix {
 public:
  PolyMatrix(Field field, size_t rows, size_t cols);
  // Builds from a nonempty rectangular list of rows.
  PolyMatrix(Field field, size_t cols, std::vector<std::vector<Poly>> rows);

  static PolyMatrix identity(Field field, size_t n);

  const Field& field() const { return field_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Poly& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Poly& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Poly> row(size_t i) const;
  void set_row(size_t i, const std::vector<Poly>& r);
  std::vector<Poly> column(size_t j) const;

  int64_t degree() const;
  bool is_zero() const;

  PolyMatrix truncated(size_t k) const;    // entrywise mod x^k
  PolyMatrix shifted_down(size_t k) const;  // entrywise div x^k
  PolyMatrix transposed() const;
  PolyMatrix select_rows(const std::vector<size_t>& idx) const;
  PolyMatrix select_cols(size_t from, size_t to) const;
  // Column blocks [*this | right].
  PolyMatrix hcat(const PolyMatrix& right) const;
  // Row blocks [*this ; below].
  PolyMatrix vcat(const PolyMatrix& below) const;

  // row_i += c * x^k * row_j
  void add_row_multiple(size_t i, size_t j, uint64_t c, size_t k);
  void add_row_multiple(size_t i, size_t j, const Poly& q);
  void scale_row(size_t i, uint64_t c);
  void shift_row_up(size_t i, size_t k);
  void swap_rows(size_t i, size_t j);

  bool operator==(const PolyMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           a_ == o.a_;
  }

 private:
  Field field_;
  size_t rows_, cols_;
  std::vector<Poly> a_;
};

// deg_s of a row vector; kNegInf for the zero vector.
int64_t shifted_degree(const std::vector<Poly>& v, const Shift& s);

RowDegrees shifted_row_degrees(const PolyMatrix& a, const Shift& s);

// Throws std::domain_error on a zero row.
ConstMatrix shifted_leading_matrix(const PolyMatrix& a, const Shift& s);

bool is_row_reduced(const PolyMatrix& a, const Shift& s);

// Square input only (DimensionError otherwise).
bool is_popov(const PolyMatrix& a, const Shift& s);

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);

// v * a
// (a*b div x^from) mod x^(to - from), without forming the full product when
// a transform is used.
PolyMatrix mat_mul_middle(const PolyMatrix& a, const PolyMatrix& b, size_t from,
                          size_t to);

std::vector<Poly> vec_mat_mul(const std::vector<Poly>& v, const PolyMatrix& a);

// Whether v lies in the K[x]-row space of `a`, which must be s-row reduced
// (std::domain_error otherwise).
bool row_space_membership(const std::vector<Poly>& v, const PolyMatrix& a,
                          const Shift& s);

// Mutual membership of all rows; each side is tested under its own shift.
bool same_row_space(const PolyMatrix& a, const Shift& sa, const PolyMatrix& b,
                    const Shift& sb);

// The s-Popov form of the row space of a square nonsingular matrix.
// Throws DimensionError if non-square, std::domain_error if singular.
PolyMatrix popov_canonical(const PolyMatrix& a, const Shift& s);

// Shifted weak Popov form (distinct pivots; rows in input order).
PolyMatrix weak_popov(const PolyMatrix& a, const Shift& s);

// Index of the rightmost entry attaining the shifted degree of row i, or -1
// for a zero row.
int64_t shifted_pivot(const PolyMatrix& a, size_t i, const Shift& s);

}  // namespace simpade
