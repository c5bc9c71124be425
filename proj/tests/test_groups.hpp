#pragma once

#include <vector>

#include "wex/character.hpp"
#include "wex/constructions.hpp"
#include "wex/cyclotomic.hpp"
#include "wex/matrix.hpp"

namespace testgroups {

using wex::Cyclotomic;
using wex::Matrix;

// Column i carries a 1 in row img[i].
inline Matrix perm_matrix(const std::vector<int>& img) {
  const int n = static_cast<int>(img.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(img[static_cast<std::size_t>(i)], i) = Cyclotomic(1);
  return m;
}

// Permutation action restricted to the sum-zero hyperplane, basis e_i - e_last.
inline Matrix deleted_perm_matrix(const std::vector<int>& img) {
  const int n = static_cast<int>(img.size()) - 1;
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const int a = img[static_cast<std::size_t>(i)], b = img[static_cast<std::size_t>(n)];
    if (a < n) m(a, i) += Cyclotomic(1);
    if (b < n) m(b, i) -= Cyclotomic(1);
  }
  return m;
}

// Points of P^1(F_5) as 0..4 and 5 = infinity.
inline std::vector<int> mobius5(int a, int b, int c, int d) {
  std::vector<int> img(6);
  auto inv = [](int x) {
    for (int y = 1; y < 5; ++y)
      if (x * y % 5 == 1) return y;
    return 0;
  };
  for (int x = 0; x <= 5; ++x) {
    int num, den;
    if (x == 5) {
      num = a;
      den = c;
    } else {
      num = (a * x + b) % 5;
      den = (c * x + d) % 5;
    }
    img[static_cast<std::size_t>(x)] = den == 0 ? 5 : num * inv(den) % 5;
  }
  return img;
}

inline std::vector<Matrix> a5_dim5() {
  return {deleted_perm_matrix(mobius5(1, 1, 0, 1)), deleted_perm_matrix(mobius5(0, 4, 1, 0))};
}

inline std::vector<Matrix> s5_dim5() {
  return {deleted_perm_matrix(mobius5(1, 1, 0, 1)), deleted_perm_matrix(mobius5(0, 4, 1, 0)),
          deleted_perm_matrix(mobius5(2, 0, 0, 1))};
}

inline std::vector<Matrix> s3_perm() { return {perm_matrix({1, 0, 2}), perm_matrix({1, 2, 0})}; }
inline std::vector<Matrix> s4_perm() { return {perm_matrix({1, 0, 2, 3}), perm_matrix({1, 2, 3, 0})}; }

// Binary icosahedral group in SL_2 at conductor 5.
inline std::vector<Matrix> binary_icosahedral() {
  auto z = [](int k) { return wex::root_of_unity(5, k); };
  const Cyclotomic sqrt5 = z(1) + z(4) - z(2) - z(3);
  const Cyclotomic inv = sqrt5 * Cyclotomic(wex::Rational(1, 5));
  Matrix s(2, 2), t(2, 2);
  s(0, 0) = -z(3);
  s(1, 1) = -z(2);
  t(0, 0) = -(z(1) - z(4)) * inv;
  t(0, 1) = (z(2) - z(3)) * inv;
  t(1, 0) = (z(2) - z(3)) * inv;
  t(1, 1) = (z(1) - z(4)) * inv;
  return {s, t};
}

// Sym^3 of the binary icosahedral representation; leaves a twisted cubic invariant.
inline std::vector<Matrix> twisted_cubic_group() {
  std::vector<Matrix> out;
  for (const auto& g : binary_icosahedral()) out.push_back(wex::sym_power_matrix(g, 3));
  return out;
}

// A_4 in its 3-dimensional monomial representation.
inline std::vector<Matrix> a4_dim3() {
  Matrix d = Matrix::diagonal({Cyclotomic(1), Cyclotomic(-1), Cyclotomic(-1)});
  return {d, perm_matrix({1, 2, 0})};
}

// 2.A_5 (x) A_4 acting on C^2 (x) C^3.
inline std::vector<Matrix> tensor_2a5_a4() {
  std::vector<Matrix> out;
  for (const auto& g : binary_icosahedral()) out.push_back(wex::kron(g, Matrix::identity(3)));
  for (const auto& g : a4_dim3()) out.push_back(wex::kron(Matrix::identity(2), g));
  return out;
}

// A_4 permuting four coordinates, plus a fixed fifth coordinate.
inline std::vector<Matrix> reducible_dim5() {
  return {perm_matrix({1, 2, 0, 3, 4}), perm_matrix({1, 0, 3, 2, 4})};
}

// 2.A_5 (x) H_3: leaves a Segre scroll invariant and has no semi-invariants of
// degree at most 5.
inline std::vector<Matrix> tensor_2a5_h3() {
  std::vector<Matrix> out;
  for (const auto& g : binary_icosahedral()) out.push_back(wex::kron(g, Matrix::identity(3)));
  for (const auto& g : wex::heisenberg(3)) out.push_back(wex::kron(Matrix::identity(2), g));
  return out;
}

}  // namespace testgroups
