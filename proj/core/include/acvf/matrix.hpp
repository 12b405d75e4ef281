#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "acvf/error.hpp"
#include "acvf/field.hpp"
#include "acvf/rational.hpp"

namespace acvf {

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  void set_col(std::size_t j, const std::vector<T>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using FieldMatrix = Matrix<FieldElem>;
using FieldVector = std::vector<FieldElem>;
using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

// ------------------------------------------------------------ over the field

FieldMatrix identity(Backend b, std::size_t n);
FieldMatrix zeros(Backend b, std::size_t rows, std::size_t cols);
FieldMatrix diagonal(const FieldVector& d);
/// diag(t^{e_1}, …, t^{e_n}).
FieldMatrix diag_t_powers(Backend b, const QVector& exps);

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
FieldVector operator*(const FieldMatrix& a, const FieldVector& x);
FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);

/// Inverse; SINGULAR_MATRIX if not invertible.
FieldMatrix inverse(const FieldMatrix& a);
/// Solves a·x = b for square invertible a.
FieldVector solve(const FieldMatrix& a, const FieldVector& b);
/// Back substitution for an upper-triangular matrix with nonzero diagonal.
FieldVector solve_upper(const FieldMatrix& u, const FieldVector& b);
FieldMatrix solve_upper(const FieldMatrix& u, const FieldMatrix& b);
std::size_t rank(const FieldMatrix& a);
bool is_invertible(const FieldMatrix& a);
bool is_upper_triangular(const FieldMatrix& a);

/// Expresses `target` as a combination of the columns of `a` if possible.
std::optional<FieldVector> solve_in_span(const FieldMatrix& a,
                                         const FieldVector& target);

/// Matrix with the given columns (all of equal length).
FieldMatrix from_columns(const std::vector<FieldVector>& cols);

Backend backend_of(const FieldMatrix& a);

/// For a PUISEUX matrix with only exact entries: the least D with every
/// exponent in (1/D)ℤ. nullopt for RATFUNC or when some entry is truncated.
std::optional<Integer> exact_root_degree(const FieldMatrix& a);
FieldMatrix to_ratfunc_in_root(const FieldMatrix& a, const Integer& d);
FieldMatrix from_ratfunc_in_root(const FieldMatrix& a, const Integer& d);

/// Minimum valuation over the entries (∞ for the zero vector).
GammaVal min_val(const FieldVector& v);

// ------------------------------------------------------------------ over ℚ

QMatrix q_identity(std::size_t n);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& x);

/// Reduced row echelon form; `pivots` receives the pivot columns.
QMatrix rref(const QMatrix& a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const QMatrix& a);
/// Basis of {x : a·x = 0} as rows, in reduced row echelon form.
QMatrix kernel_rows(const QMatrix& a);
std::optional<QMatrix> q_inverse(const QMatrix& a);
bool q_is_invertible(const QMatrix& a);
/// Expresses `target` as a combination of the columns of `a` if possible.
std::optional<QVector> q_solve_in_span(const QMatrix& a, const QVector& target);

}  // namespace acvf
