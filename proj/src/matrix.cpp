#include "wex/matrix.hpp"

#include "wex/error.hpp"

namespace wex {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

Matrix Matrix::identity(int n) { return scalar(n, Cyclotomic(1)); }

Matrix Matrix::scalar(int n, const Cyclotomic& c) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  const int n = static_cast<int>(d.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw domain_error("ShapeMismatch", "matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Cyclotomic& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Cyclotomic& y = o(k, j);
        if (y.is_zero()) continue;
        r(i, j) += x * y;
      }
    }
  }
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw domain_error("ShapeMismatch", "matrix-vector shape mismatch");
  Vector r(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Cyclotomic& x = (*this)(i, k);
      if (x.is_zero() || v[static_cast<std::size_t>(k)].is_zero()) continue;
      r[static_cast<std::size_t>(i)] += x * v[static_cast<std::size_t>(k)];
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("ShapeMismatch", "matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(Cyclotomic(-1)); }

Matrix Matrix::scaled(const Cyclotomic& c) const {
  Matrix r = *this;
  for (auto& x : r.a_)
    if (!x.is_zero()) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conj() const {
  Matrix r = *this;
  for (auto& x : r.a_) x = x.conj();
  return r;
}

Cyclotomic Matrix::trace() const {
  Cyclotomic t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Cyclotomic& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool Matrix::is_scalar() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j) {
        if (!((*this)(i, i) == (*this)(0, 0))) return false;
      } else if (!(*this)(i, j).is_zero()) {
        return false;
      }
    }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

int Matrix::conductor() const {
  long long m = 1;
  for (const auto& x : a_) m = lcm_int(m, x.conductor());
  return static_cast<int>(m);
}

Matrix& Matrix::normalize(int m) {
  for (auto& x : a_)
    if (x.conductor() != m) x = cyclo_embed(x, m);
  return *this;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (!(a.a_[i] == b.a_[i])) return false;
  return true;
}

std::size_t Matrix::hash() const {
  std::size_t h = static_cast<std::size_t>(rows_) * 1000003u + static_cast<std::size_t>(cols_);
  for (const auto& x : a_) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Cyclotomic inv = m(row, col).inverse();
    for (int j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Cyclotomic f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

Cyclotomic determinant(Matrix m) {
  if (m.rows() != m.cols()) throw domain_error("ShapeMismatch", "determinant of non-square matrix");
  const int n = m.rows();
  Cyclotomic det(1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (!m(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Cyclotomic(0);
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Cyclotomic inv = m(col, col).inverse();
    for (int i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const Cyclotomic f = m(i, col) * inv;
      for (int j = col; j < n; ++j)
        if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw domain_error("ShapeMismatch", "inverse of non-square matrix");
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Cyclotomic(1);
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  Matrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix r = m;
  const auto piv = rref(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(free)] = Cyclotomic(1);
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (!r(static_cast<int>(i), free).is_zero()) v[static_cast<std::size_t>(piv[i])] = -r(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix from_rows(const std::vector<Vector>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
  return m;
}

Matrix from_columns(const std::vector<Vector>& columns, int rows) {
  Matrix m(rows, static_cast<int>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = columns[j][static_cast<std::size_t>(i)];
  return m;
}

std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors, int dim) {
  if (vectors.empty()) return {};
  Matrix m = from_rows(vectors, dim);
  const auto piv = rref(m);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    Vector v(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) v[static_cast<std::size_t>(j)] = m(static_cast<int>(i), j);
    out.push_back(std::move(v));
  }
  return out;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace wex
