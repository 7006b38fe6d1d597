#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "cobalex/error.hpp"

namespace cobalex {

/// Dense row-major matrix over an exact scalar type (mpz_class or mpq_class).
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
      }
      for (long v : row) data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void set_column(std::size_t c, std::span<const T> values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Rows [r0, r0 + count) as a new matrix.
  Matrix row_block(std::size_t r0, std::size_t count) const {
    Matrix out(count, cols_);
    for (std::size_t r = 0; r < count; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r0 + r, c);
    return out;
  }

  Matrix col_block(std::size_t c0, std::size_t count) const {
    Matrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, c0 + c);
    return out;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorKind::DimensionMismatch, "matrix sum shapes");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorKind::DimensionMismatch, "matrix difference shapes");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }

  std::vector<T> apply(std::span<const T> x) const {
    if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shapes");
    std::vector<T> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  T trace() const {
    T s = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

/// Stack two matrices with the same column count.
template <typename T>
Matrix<T> vstack(const Matrix<T>& top, const Matrix<T>& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack column counts");
  Matrix<T> out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  return out;
}

template <typename T>
Matrix<T> hstack(const Matrix<T>& left, const Matrix<T>& right) {
  if (left.rows() != right.rows()) throw Error(ErrorKind::DimensionMismatch, "hstack row counts");
  Matrix<T> out(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) out(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) out(r, left.cols() + c) = right(r, c);
  }
  return out;
}

RatMatrix to_rational(const IntMatrix& m);

// --- Rational linear algebra -------------------------------------------------

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
RatMatrix rref(RatMatrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Columns form a basis of the right kernel. Free variables are set to unit
/// vectors in increasing column order, so the basis is the reduced-echelon one.
RatMatrix kernel_basis(const RatMatrix& m);

/// A solution x of m·x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<mpq_class>> solve(const RatMatrix& m, std::span<const mpq_class> b);

/// Fraction-free (Bareiss) determinant.
mpz_class determinant(const IntMatrix& m);

// --- Integer lattices --------------------------------------------------------

/// Saturated Z-basis (columns) of {x in Z^n : m·x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Z-basis of span_Q(columns) ∩ Z^rows.
IntMatrix saturate(const IntMatrix& m);

/// Canonical column Hermite form of a full-column-rank lattice basis: pivots in
/// increasing rows, positive, with entries to the left of each pivot reduced
/// into [0, pivot). Two bases span the same lattice iff their forms agree.
IntMatrix hermite_column_form(const IntMatrix& m);

/// Nonzero Smith invariants d1 | d2 | ... of m (all positive).
std::vector<mpz_class> smith_invariants(const IntMatrix& m);

/// Index of the lattice spanned by the columns inside its saturation:
/// the product of the Smith invariants.
mpz_class saturation_index(const IntMatrix& m);

}  // namespace cobalex
