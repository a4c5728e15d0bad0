#include "skewbez/matrix.hpp"

#include <utility>

namespace skewbez {

namespace {

void require_shape(bool cond, const char* what) {
  if (!cond) throw domain_error(std::string("matrix shape mismatch in ") + what);
}

}  // namespace

Matrix::Matrix(const Field& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {
  if (rows < 0 || cols < 0) throw domain_error("negative matrix dimension");
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::column(const Field& f, std::vector<Scalar> entries) {
  Matrix m(f, static_cast<int>(entries.size()), 1);
  for (int i = 0; i < m.rows_; ++i) m.at(i, 0) = std::move(entries[i]);
  return m;
}

Matrix Matrix::unit_column(const Field& f, int dim, int index) {
  Matrix m(f, dim, 1);
  m.at(index, 0) = Scalar::one(f);
  return m;
}

Matrix Matrix::diagonal(const Field& f, const std::vector<Scalar>& entries) {
  int n = static_cast<int>(entries.size());
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = entries[i];
  return m;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw domain_error("block_diag of nothing");
  int n = 0;
  for (const Matrix& b : blocks) {
    require_shape(b.is_square(), "block_diag");
    n += b.rows();
  }
  Matrix m(blocks.front().field(), n, n);
  int off = 0;
  for (const Matrix& b : blocks) {
    detail::require_same_field(m.field_, b.field_, "block_diag");
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
    off += b.rows();
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Matrix>& cols) {
  if (cols.empty()) throw domain_error("from_columns of nothing");
  int n = cols.front().rows();
  Matrix m(cols.front().field(), n, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols_; ++j) {
    require_shape(cols[j].rows() == n && cols[j].cols() == 1, "from_columns");
    for (int i = 0; i < n; ++i) m.at(i, j) = cols[j].at(i, 0);
  }
  return m;
}

Matrix Matrix::col(int j) const {
  Matrix c(field_, rows_, 1);
  for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

Matrix Matrix::operator+(const Matrix& o) const {
  detail::require_same_field(field_, o.field_, "matrix addition");
  require_shape(rows_ == o.rows_ && cols_ == o.cols_, "addition");
  Matrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  detail::require_same_field(field_, o.field_, "matrix multiplication");
  require_shape(cols_ == o.rows_, "multiplication");
  Matrix r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix r(field_, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (data_[k] != o.data_[k]) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::pow(unsigned n) const {
  require_shape(is_square(), "pow");
  Matrix acc = identity(field_, rows_);
  Matrix base = *this;
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const { return is_square() && *this == transposed(); }

bool Matrix::is_skew_symmetric() const {
  return is_square() && transposed() == -*this;
}

Scalar Matrix::det() const {
  require_shape(is_square(), "det");
  Matrix a = *this;
  int n = rows_;
  Scalar sign = Scalar::one(field_);
  Scalar prod = Scalar::one(field_);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) return Scalar::zero(field_);
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
      sign = -sign;
    }
    prod *= a.at(col, col);
    Scalar inv = a.at(col, col).inverse();
    for (int i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col) * inv;
      for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return sign * prod;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelonize(Matrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i)
      if (!a.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    Scalar inv = a.at(row, col).inverse();
    for (int j = col; j < a.cols(); ++j) a.at(row, j) = a.at(row, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col);
      for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int Matrix::rank() const {
  Matrix a = *this;
  return static_cast<int>(echelonize(a).size());
}

Matrix Matrix::inverse() const {
  require_shape(is_square(), "inverse");
  int n = rows_;
  Matrix aug(field_, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = Scalar::one(field_);
  }
  std::vector<int> pivots = echelonize(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
    throw domain_error("matrix is singular");
  Matrix inv(field_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Matrix Matrix::kernel_basis() const {
  Matrix a = *this;
  std::vector<int> pivots = echelonize(a);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<Matrix> basis;
  for (int freec = 0; freec < cols_; ++freec) {
    if (is_pivot[freec]) continue;
    Matrix v(field_, cols_, 1);
    v.at(freec, 0) = Scalar::one(field_);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] < freec) v.at(pivots[r], 0) = -a.at(static_cast<int>(r), freec);
    }
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Matrix(field_, cols_, 0);
  return from_columns(basis);
}

Scalar bilinear(const Matrix& gram, const Matrix& u, const Matrix& v) {
  return (u.transposed() * gram * v).at(0, 0);
}

Matrix primitive_column(const Matrix& v) {
  const Field& f = v.field();
  if (!f.is_rational()) return v;
  mpz_class denom_lcm = 1, num_gcd = 0;
  for (int i = 0; i < v.rows(); ++i)
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
            v.at(i, 0).value().get_den().get_mpz_t());
  for (int i = 0; i < v.rows(); ++i) {
    mpz_class n = mpz_class(v.at(i, 0).value() * denom_lcm);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) return v;
  return v * Scalar(f, mpq_class(denom_lcm) / mpq_class(num_gcd));
}

Matrix primitive_columns(const Matrix& m) {
  if (m.cols() == 0) return m;
  std::vector<Matrix> cols;
  for (int j = 0; j < m.cols(); ++j) cols.push_back(primitive_column(m.col(j)));
  return Matrix::from_columns(cols);
}

}  // namespace skewbez
