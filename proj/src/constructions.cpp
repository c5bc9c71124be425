#include "wex/constructions.hpp"

#include "wex/error.hpp"
#include "wex/matrix_group.hpp"

namespace wex {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Matrix cyclic_shift(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, (i + 1) % n) = Cyclotomic(1);
  return m;
}

std::vector<Matrix> heisenberg(int p) {
  if (p < 3 || !is_prime(p)) throw domain_error("NotOddPrime", std::to_string(p) + " is not an odd prime");
  Matrix shift = cyclic_shift(p);
  Vector d;
  for (int i = 0; i < p; ++i) d.push_back(root_of_unity(p, i));
  Matrix diag = Matrix::diagonal(d);
  shift.normalize(p);
  diag.normalize(p);
  return {shift, diag};
}

std::vector<Matrix> diagonal_group(int n, int k, DiagonalPerm perm, const std::vector<Matrix>& extra) {
  if (n < 1) throw domain_error("OutOfRange", "n must be positive");
  if (k < n + 1)
    throw domain_error("KTooSmall", "k = " + std::to_string(k) + " is smaller than n + 1 = " + std::to_string(n + 1));
  std::vector<Matrix> gens = diagonal_torus_generators(n + 1, k);
  if (perm == DiagonalPerm::Cyclic) {
    Matrix s = cyclic_shift(n + 1);
    s.normalize(k);
    gens.push_back(std::move(s));
  }
  for (const auto& m : extra) {
    if (m.rows() != n + 1 || m.cols() != n + 1)
      throw Error(ErrorKind::Validation, "ShapeMismatch", "extra generator has the wrong size");
    gens.push_back(m);
  }
  return gens;
}

}  // namespace wex
