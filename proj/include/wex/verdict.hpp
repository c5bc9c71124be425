#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wex/character.hpp"
#include "wex/dixon.hpp"

namespace wex {

enum class Verdict { WeaklyExceptional, NotWeaklyExceptional, Inconclusive, ReflectionsPresent };
enum class Status { Pass, Fail, Unknown };

const char* to_string(Verdict v);
const char* to_string(Status s);

struct Witness {
  std::string kind;  // semi_invariant | subrepresentation | reflection | reducible | torus
  int degree = 0;    // polynomial degree for polynomial witnesses
  int variables = 0;
  std::vector<Vector> polynomials;  // monomial coefficient vectors, lex order
  std::optional<Matrix> element;
  std::string detail;
};

struct ConditionResult {
  std::string name;
  Status status = Status::Unknown;
  std::string reason;
  std::optional<Witness> witness;
};

struct VerdictReport {
  int dimension = 0;
  std::optional<std::size_t> group_order;  // empty for table input
  Verdict verdict = Verdict::Inconclusive;
  std::string rule;
  std::string rule_statement;
  std::vector<ConditionResult> conditions;
  std::map<int, long long> semi_invariants;
};

/// Everything the checks need about one group, computed lazily.
class Source {
 public:
  static Source from_group(FiniteMatrixGroup g, std::size_t cap = kDefaultCap);
  static Source from_table(CharacterTable t);

  bool has_group() const noexcept { return group_.has_value(); }
  const FiniteMatrixGroup& group() const { return *group_; }
  const FiniteMatrixGroup& derived();
  int degree() const;
  const ClassStructurePtr& classes() const noexcept { return classes_; }
  const ClassFunction& natural() const noexcept { return natural_; }
  const std::vector<ClassFunction>& linear();
  const CharacterTable& table();

  bool transitive();
  Rational natural_norm();
  long long semi_invariants(int d);
  /// Polynomial semi-invariant of degree d (group input only).
  std::optional<Vector> semi_invariant_polynomial(int d);

 private:
  std::optional<FiniteMatrixGroup> group_;
  std::optional<FiniteMatrixGroup> derived_;
  std::size_t cap_ = kDefaultCap;
  ClassStructurePtr classes_;
  ClassFunction natural_;
  std::optional<std::vector<ClassFunction>> linear_;
  std::optional<CharacterTable> table_;
  std::map<int, long long> s_;
};

struct RuleHint {
  enum class Kind { Auto, Dim, Diagonal } kind = Kind::Auto;
  int k = 0;  // for Diagonal
};

VerdictReport verdict(Source& src, RuleHint hint = {});
VerdictReport check_dim2_3(Source& src);
VerdictReport check_dim4(Source& src);
VerdictReport check_dim5(Source& src);
VerdictReport check_dim6(Source& src);
VerdictReport check_diagonal(Source& src, int k);
/// The extraspecial pattern for prime degree p: |G| = p^3, non-abelian,
/// exponent p. std::nullopt when the pattern does not apply.
std::optional<VerdictReport> check_heisenberg_pattern(Source& src);

}  // namespace wex
