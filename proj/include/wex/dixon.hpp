#pragma once

#include <functional>
#include <vector>

#include "wex/character.hpp"

namespace wex {

/// Class-algebra data consumed by the Dixon-Schneider core.
///
/// `classes` must carry power maps for every exponent below `exponent`, and
/// class 0 must be the identity. `structure_matrix(i)` returns the matrix
/// M_i with M_i[j][k] = #{x in C_i : x^-1 z_k in C_j}, z_k a fixed element
/// of C_k, so that the central character of each irreducible is a common
/// right eigenvector of all M_i.
struct ClassAlgebra {
  ClassStructurePtr classes;
  int exponent = 1;
  std::function<std::vector<std::vector<long long>>(int)> structure_matrix;
};

/// Smallest prime p = 1 (mod e) with p^2 > 4 |G|.
long long dixon_prime(int exponent, std::size_t order);

/// Irreducible characters with exact values at conductor `classes->conductor`,
/// trivial first, then by degree. Throws OrthogonalityFailure when the
/// exact checks fail.
CharacterTable dixon_table(const ClassAlgebra& algebra);
CharacterTable dixon_table(const FiniteMatrixGroup& g, const ClassStructurePtr& cs);

/// Exact row and column orthogonality and sum of squared degrees.
void validate_orthogonality(const CharacterTable& t);

}  // namespace wex
