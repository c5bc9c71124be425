#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "wex/matrix_group.hpp"

namespace wex {

/// Class-level data shared by every class function on one group.
struct ClassStructure {
  std::size_t order = 1;
  int conductor = 1;  // values of characters live in Q(zeta_conductor)
  std::vector<int> sizes;
  std::vector<int> element_orders;
  /// power_maps[k][c] = class of g^k for g in class c, for k < power_maps.size().
  std::vector<std::vector<int>> power_maps;

  std::size_t class_count() const noexcept { return sizes.size(); }
  /// Class of g^k; k is reduced modulo the element order first. Throws
  /// MissingPowerMap when the reduced exponent is not available.
  int power(int c, long long k) const;
  bool same_as(const ClassStructure& o) const;
};

using ClassStructurePtr = std::shared_ptr<const ClassStructure>;

/// Class structure of an enumerated group, with power maps for every
/// exponent below the group exponent.
ClassStructurePtr class_structure(const FiniteMatrixGroup& g);

struct ClassFunction {
  ClassStructurePtr classes;
  Vector values;

  const Cyclotomic& operator[](int c) const { return values[static_cast<std::size_t>(c)]; }
  std::size_t size() const noexcept { return values.size(); }
  /// Value at the identity class as an integer.
  long long degree() const;
};

struct CharacterTable {
  ClassStructurePtr classes;
  std::vector<ClassFunction> irreducibles;
  std::vector<bool> linear;
  std::optional<int> natural_index;
  std::optional<ClassFunction> natural;  // always set when natural_index is
};

ClassFunction natural_character(const FiniteMatrixGroup& g, const ClassStructurePtr& cs);
ClassFunction trivial_character(const ClassStructurePtr& cs);

/// (1/|G|) sum size * chi * conj(psi). Throws GroupMismatch.
Rational char_inner(const ClassFunction& chi, const ClassFunction& psi);
ClassFunction dual_character(const ClassFunction& chi);
/// Newton recursion for the d-th symmetric power. Throws MissingPowerMap.
ClassFunction sym_power_character(const ClassFunction& chi, int d);

/// Exponent vectors of degree-d monomials in n variables, lex order with
/// x_0 > x_1 > ... (so x_0^d comes first).
std::vector<std::vector<int>> monomials(int n, int d);
/// Action on degree-d forms, (g.F)(x) = F(g^-1 x), in the monomial basis.
Matrix sym_power_matrix(const Matrix& g, int d);

/// Linear characters of the group, pulled back from G/[G,G].
std::vector<ClassFunction> linear_characters(const FiniteMatrixGroup& g, const FiniteMatrixGroup& derived,
                                             const ClassStructurePtr& cs);

/// s_d through the [G,G]-average of the Sym^d(V^dual) character.
long long semiinvariant_count_group(const FiniteMatrixGroup& g, const FiniteMatrixGroup& derived,
                                    const ClassFunction& natural, int d);
/// s_d through the sum over linear characters.
long long semiinvariant_count_linear(const ClassFunction& natural, const std::vector<ClassFunction>& linear, int d);
/// Table path; throws MissingLinearFlags when the table carries no linear flags.
long long semiinvariant_count(const CharacterTable& t, int d);

/// Scalar classes c (where |chi(c)| = chi(1)) with their scalar chi(c)/chi(1).
std::vector<std::pair<int, Cyclotomic>> scalar_classes(const ClassFunction& natural);
/// True when some scalar z*I has no linear character with lambda(zI) = z^-d.
bool central_obstruction(const ClassFunction& natural, const std::vector<ClassFunction>& linear, int d);

/// Irreducible constituents with positive multiplicity, as (index, multiplicity).
/// Throws NonIntegralMultiplicity.
std::vector<std::pair<int, long long>> constituent_multiplicities(const ClassFunction& chi, const CharacterTable& t);

/// Bounded subset sum over (dimension, multiplicity) pairs.
bool subrep_dimension_reachable(const std::vector<std::pair<long long, long long>>& dims_mults, long long t);

/// Isotypic projector of irreducible `irrep` on Sym^d(V^dual).
Matrix isotypic_projector(const FiniteMatrixGroup& g, const CharacterTable& t, int d, int irrep);
/// Basis of the image of the projector, as monomial coefficient vectors.
std::vector<Vector> isotypic_basis(const FiniteMatrixGroup& g, const CharacterTable& t, int d, int irrep);

/// Basis of the subspace of Sym^d(V^dual) fixed by every element of `sub`.
std::vector<Vector> fixed_subspace(const FiniteMatrixGroup& sub, int d);

/// A degree-d semi-invariant: a vector in the [G,G]-fixed subspace that is an
/// eigenvector of every generator. std::nullopt when s_d = 0.
std::optional<Vector> semi_invariant_witness(const FiniteMatrixGroup& g, const FiniteMatrixGroup& derived, int d);

/// Scales v so that its first nonzero coordinate is 1.
Vector normalize_leading(const Vector& v);

long long binomial(long long n, long long k);

}  // namespace wex
