#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wex/cyclotomic.hpp"

namespace wex {

using Vector = std::vector<Cyclotomic>;

/// Dense row-major matrix over cyclotomic fields.
///
/// Entries may live at different conductors; call normalize(m) before
/// hashing or comparing structurally so that every entry sits at one
/// conductor and the representation is canonical.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);
  static Matrix scalar(int n, const Cyclotomic& c);
  static Matrix diagonal(const Vector& d);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Cyclotomic& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Cyclotomic& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const std::vector<Cyclotomic>& entries() const noexcept { return a_; }

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Cyclotomic& c) const;
  Matrix transpose() const;
  /// Entry-wise complex conjugate.
  Matrix conj() const;

  Cyclotomic trace() const;
  bool is_identity() const;
  bool is_scalar() const;
  bool is_zero() const;

  /// lcm of entry conductors.
  int conductor() const;
  /// Every entry re-expressed at conductor m (m must be a multiple of each).
  Matrix& normalize(int m);

  friend bool operator==(const Matrix& a, const Matrix& b);
  std::size_t hash() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cyclotomic> a_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Row-reduced echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m);
int rank(Matrix m);
Cyclotomic determinant(Matrix m);
/// std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& m);
/// Reduced basis of the span of the given vectors (rows of the rref).
std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors, int dim);

Matrix from_rows(const std::vector<Vector>& rows, int cols);
Matrix from_columns(const std::vector<Vector>& columns, int rows);

bool is_zero_vector(const Vector& v);

}  // namespace wex
