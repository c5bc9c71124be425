#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wex/matrix.hpp"

namespace wex {

constexpr std::size_t kDefaultCap = 200000;

struct ConjugacyClass {
  int representative = 0;  // element index, smallest in the class
  int size = 0;
  int element_order = 1;
  std::vector<int> members;  // sorted element indices
};

/// Finite subgroup of GL_n over a cyclotomic field, fully enumerated.
///
/// Elements are stored at one working conductor (lcm of the generator
/// entry conductors) in the order a breadth-first closure discovers them:
/// the identity first, then right multiplication by the generators in
/// declaration order. Element 0 is always the identity and class 0 is
/// always the identity class.
class FiniteMatrixGroup {
 public:
  int degree() const noexcept { return degree_; }
  int conductor() const noexcept { return conductor_; }
  std::size_t order() const noexcept { return elements_.size(); }
  int exponent() const noexcept { return exponent_; }

  const std::vector<Matrix>& generators() const noexcept { return generators_; }
  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  const Matrix& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  int class_of(int element) const { return class_of_[static_cast<std::size_t>(element)]; }
  int element_order(int element) const { return order_of_[static_cast<std::size_t>(element)]; }

  /// Index of a matrix in the element list, if present. The matrix is
  /// normalized to the working conductor first.
  std::optional<int> index_of(const Matrix& m) const;
  int multiply(int a, int b) const;
  int inverse(int a) const;
  int power(int a, long long k) const;

 private:
  friend FiniteMatrixGroup closure(int, const std::vector<Matrix>&, std::size_t);

  int degree_ = 0;
  int conductor_ = 1;
  int exponent_ = 1;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
  std::unordered_map<Matrix, int, MatrixHash> index_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  std::vector<int> order_of_;
};

/// Breadth-first closure. Throws CapExceeded when more than `cap` elements
/// appear, NotInvertible for a singular generator, and
/// InfiniteOrderSuspected when a generator's powers do not cycle within cap.
FiniteMatrixGroup closure(int degree, const std::vector<Matrix>& generators, std::size_t cap = kDefaultCap);
FiniteMatrixGroup closure(const std::vector<Matrix>& generators, std::size_t cap = kDefaultCap);

/// class index -> class index of the k-th power.
std::vector<int> power_map(const FiniteMatrixGroup& g, long long k);

/// Normal closure of the generator commutators.
FiniteMatrixGroup commutator_subgroup(const FiniteMatrixGroup& g, std::size_t cap = kDefaultCap);

/// All c with c * I in the group, in element order.
std::vector<Cyclotomic> central_scalars(const FiniteMatrixGroup& g);

struct EigenvalueMultiplicity {
  int order = 1;  // r: the eigenvalue is zeta_r^exponent
  int exponent = 0;
  int multiplicity = 0;
};

/// Multiplicities of zeta_r^j (r = order of m) for every j with nonzero
/// multiplicity, increasing in j.
std::vector<EigenvalueMultiplicity> eigenvalue_multiplicities(const Matrix& m);
/// Multiplicative order of a matrix; throws InfiniteOrderSuspected past cap.
int matrix_order(const Matrix& m, std::size_t cap = kDefaultCap);

bool is_reflection(const Matrix& m);
/// Element index of the first reflection in class order, if any.
std::optional<int> contains_reflections(const FiniteMatrixGroup& g);

/// gamma_i = diag with zeta_k^-1 in slot 0 and zeta_k in slot i, i = 1..n.
std::vector<Matrix> diagonal_torus_generators(int degree, int k);
bool contains_diagonal_torus(const FiniteMatrixGroup& g, int k);

}  // namespace wex
