#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitvar/algebra/rational.hpp"
#include "orbitvar/algebra/upoly.hpp"
#include "orbitvar/error.hpp"

namespace orbitvar::alg {

/// Dense row-major matrix. Used with Rational entries for exact linear
/// algebra and with UPoly entries for one-parameter curves.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorCode::InvalidArgument, "matrix entry count does not match shape");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
    std::size_t c = rows.empty() ? cols : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<T>& entries() const { return data_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  std::vector<T> column_vector(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  bool is_zero() const {
    for (const auto& e : data_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& e : data_) e *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
        }
      }
    return p;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<UPoly>;
using QVector = std::vector<Rational>;
using PolyVector = std::vector<UPoly>;

struct RrefResult {
  QMatrix matrix;  // reduced row-echelon form, zero rows kept at the bottom
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form. Pivot rows are chosen by largest
/// numerator magnitude within the column; the result does not depend on it.
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

inline bool is_zero(const QVector& v) {
  for (const auto& c : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

/// Rows of rref(m) that are nonzero.
QMatrix row_basis(const QMatrix& m);

/// Basis (as rows, in canonical rref) of the right null space {x : m x = 0}.
QMatrix kernel(const QMatrix& m);

/// Some solution of a x = b, or nullopt if the system is inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

std::optional<QMatrix> inverse(const QMatrix& m);

Rational determinant(const QMatrix& m);

/// Fraction-free (Bareiss) determinant over Q[z].
UPoly determinant(const PolyMatrix& m);

QVector multiply(const QMatrix& m, const QVector& v);

PolyMatrix to_poly(const QMatrix& m);
QMatrix evaluate(const PolyMatrix& m, const Rational& z);

/// det(z I - m).
UPoly characteristic_polynomial(const QMatrix& m);

/// p(m) by Horner's rule.
QMatrix evaluate(const UPoly& p, const QMatrix& m);

std::string to_string(const QMatrix& m);

}  // namespace orbitvar::alg
