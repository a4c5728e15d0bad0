#pragma once

#include <vector>

#include "skewbez/field.hpp"

namespace skewbez {

/// Dense matrix over an exact field.  Vectors are d x 1 matrices.
class Matrix {
 public:
  Matrix(const Field& f, int rows, int cols);

  static Matrix identity(const Field& f, int n);
  static Matrix column(const Field& f, std::vector<Scalar> entries);
  static Matrix unit_column(const Field& f, int dim, int index);
  static Matrix diagonal(const Field& f, const std::vector<Scalar>& entries);
  static Matrix block_diag(const std::vector<Matrix>& blocks);
  static Matrix from_columns(const std::vector<Matrix>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix col(int j) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  Matrix operator-() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transposed() const;
  Matrix pow(unsigned n) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;

  /// Exact determinant by Gaussian elimination.
  Scalar det() const;
  int rank() const;
  Matrix inverse() const;
  /// Columns form a basis of the kernel (0 columns when injective).
  Matrix kernel_basis() const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Scalar> data_;
};

/// u^T G v for column vectors u, v.
Scalar bilinear(const Matrix& gram, const Matrix& u, const Matrix& v);

/// Over Q, rescales a column to primitive integer entries (no-op over F_p
/// and on zero columns).  Spans are unchanged; Gram determinants of rescaled
/// bases change by squares only.
Matrix primitive_column(const Matrix& v);
/// primitive_column applied to every column.
Matrix primitive_columns(const Matrix& m);

}  // namespace skewbez
