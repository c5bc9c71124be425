#pragma once

#include <vector>

#include "wex/matrix.hpp"

namespace wex {

bool is_prime(long long n);

/// Cyclic coordinate shift (x_0:...:x_{p-1}) -> (x_1:...:x_0), i.e. the matrix
/// sending e_i to e_{i-1 mod p}, and diag(1, zeta_p, ..., zeta_p^{p-1}).
/// Throws NotOddPrime.
std::vector<Matrix> heisenberg(int p);

/// Coordinate shift of size n (same convention as heisenberg).
Matrix cyclic_shift(int n);

enum class DiagonalPerm { Cyclic, None };

/// The n diagonal generators gamma_i of order k in degree n+1, then the
/// (n+1)-cycle for DiagonalPerm::Cyclic, then the extras. Throws KTooSmall.
std::vector<Matrix> diagonal_group(int n, int k, DiagonalPerm perm, const std::vector<Matrix>& extra = {});

}  // namespace wex
