#include "wex/verdict.hpp"

#include <sstream>

#include "wex/constructions.hpp"
#include "wex/error.hpp"

namespace wex {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::WeaklyExceptional: return "WEAKLY_EXCEPTIONAL";
    case Verdict::NotWeaklyExceptional: return "NOT_WEAKLY_EXCEPTIONAL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    case Verdict::ReflectionsPresent: return "REFLECTIONS_PRESENT";
  }
  return "INCONCLUSIVE";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

Source Source::from_group(FiniteMatrixGroup g, std::size_t cap) {
  Source s;
  s.cap_ = cap;
  s.classes_ = class_structure(g);
  s.natural_ = natural_character(g, s.classes_);
  s.group_ = std::move(g);
  return s;
}

Source Source::from_table(CharacterTable t) {
  if (!t.natural) throw Error(ErrorKind::Validation, "MissingNatural", "table has no natural character");
  if (t.linear.size() != t.irreducibles.size())
    throw Error(ErrorKind::Validation, "MissingLinearFlags", "table has no linear flags");
  Source s;
  s.classes_ = t.classes;
  s.natural_ = *t.natural;
  s.table_ = std::move(t);
  return s;
}

const FiniteMatrixGroup& Source::derived() {
  if (!derived_) derived_ = commutator_subgroup(*group_, cap_);
  return *derived_;
}

int Source::degree() const { return static_cast<int>(natural_.degree()); }

const std::vector<ClassFunction>& Source::linear() {
  if (!linear_) {
    if (group_) {
      linear_ = linear_characters(*group_, derived(), classes_);
    } else {
      std::vector<ClassFunction> lin;
      for (std::size_t i = 0; i < table_->irreducibles.size(); ++i)
        if (table_->linear[i]) lin.push_back(table_->irreducibles[i]);
      linear_ = std::move(lin);
    }
  }
  return *linear_;
}

const CharacterTable& Source::table() {
  if (!table_) {
    table_ = dixon_table(*group_, classes_);
    for (std::size_t i = 0; i < table_->irreducibles.size(); ++i)
      if (table_->irreducibles[i].values == natural_.values) table_->natural_index = static_cast<int>(i);
    table_->natural = natural_;
  }
  return *table_;
}

Rational Source::natural_norm() { return char_inner(natural_, natural_); }

bool Source::transitive() { return natural_norm() == Rational(1); }

long long Source::semi_invariants(int d) {
  auto it = s_.find(d);
  if (it != s_.end()) return it->second;
  long long v;
  if (central_obstruction(natural_, linear(), d))
    v = 0;
  else if (group_)
    v = semiinvariant_count_group(*group_, derived(), natural_, d);
  else
    v = semiinvariant_count_linear(natural_, linear(), d);
  s_[d] = v;
  return v;
}

std::optional<Vector> Source::semi_invariant_polynomial(int d) {
  if (!group_) return std::nullopt;
  return semi_invariant_witness(*group_, derived(), d);
}

namespace {

void require_degree(Source& src, std::initializer_list<int> allowed) {
  for (int d : allowed)
    if (src.degree() == d) return;
  throw domain_error("WrongDimension", "criterion does not apply in degree " + std::to_string(src.degree()));
}

VerdictReport base_report(Source& src, std::string rule, std::string statement) {
  VerdictReport r;
  r.dimension = src.degree();
  if (src.has_group()) r.group_order = src.group().order();
  r.rule = std::move(rule);
  r.rule_statement = std::move(statement);
  return r;
}

ConditionResult transitivity(Source& src) {
  ConditionResult c;
  c.name = "transitive";
  const Rational norm = src.natural_norm();
  if (norm == Rational(1)) {
    c.status = Status::Pass;
    c.reason = "<chi,chi> = 1";
  } else {
    c.status = Status::Fail;
    c.reason = "<chi,chi> = " + norm.str();
    Witness w;
    w.kind = "reducible";
    w.detail = "<chi,chi> = " + norm.str();
    c.witness = w;
  }
  return c;
}

ConditionResult semi_invariant_condition(Source& src, int d) {
  ConditionResult c;
  c.name = "s_" + std::to_string(d) + " = 0";
  const long long s = src.semi_invariants(d);
  if (s == 0) {
    c.status = Status::Pass;
    c.reason = "no semi-invariants of degree " + std::to_string(d);
    return c;
  }
  c.status = Status::Fail;
  c.reason = std::to_string(s) + " independent semi-invariant(s) of degree " + std::to_string(d);
  if (auto poly = src.semi_invariant_polynomial(d)) {
    Witness w;
    w.kind = "semi_invariant";
    w.degree = d;
    w.variables = src.degree();
    w.polynomials.push_back(*poly);
    c.witness = w;
  } else {
    c.reason += " (table input, counted from characters)";
  }
  return c;
}

// Semi-invariant conditions for d = 1..max, stopping after the first failure.
bool semi_invariant_conditions(Source& src, int max_d, VerdictReport& r) {
  for (int d = 1; d <= max_d; ++d) {
    auto c = semi_invariant_condition(src, d);
    r.semi_invariants[d] = src.semi_invariants(d);
    const bool failed = c.status == Status::Fail;
    r.conditions.push_back(std::move(c));
    if (failed) return false;
  }
  return true;
}

std::vector<Vector> g_span(const FiniteMatrixGroup& g, int d, const Vector& v) {
  std::vector<Matrix> rho;
  for (const auto& gen : g.generators()) rho.push_back(sym_power_matrix(gen, d));
  const int dim = static_cast<int>(v.size());
  std::vector<Vector> basis = row_space_basis({v}, dim);
  for (;;) {
    std::vector<Vector> all = basis;
    for (const auto& m : rho)
      for (const auto& b : basis) all.push_back(m * b);
    auto next = row_space_basis(all, dim);
    if (next.size() == basis.size()) return basis;
    basis = std::move(next);
  }
}

std::string dims_text(const std::vector<std::pair<long long, long long>>& dm) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [dim, mult] : dm) {
    if (!first) os << ", ";
    first = false;
    os << dim;
    if (mult > 1) os << "x" << mult;
  }
  os << "}";
  return os.str();
}

// Subrepresentation proxy: no invariant subspace of any dimension in `targets`
// inside Sym^d(V^dual).
ConditionResult subrep_condition(Source& src, const std::string& name, int d, const std::vector<long long>& targets) {
  ConditionResult c;
  c.name = name;
  const CharacterTable& t = src.table();
  const auto symd = sym_power_character(dual_character(src.natural()), d);
  const auto mults = constituent_multiplicities(symd, t);
  std::vector<std::pair<long long, long long>> dm;
  for (const auto& [i, m] : mults) dm.emplace_back(t.irreducibles[static_cast<std::size_t>(i)].degree(), m);
  const std::string sym = "Sym^" + std::to_string(d) + "(V^dual)";
  std::optional<long long> hit;
  for (long long target : targets)
    if (subrep_dimension_reachable(dm, target)) {
      hit = target;
      break;
    }
  if (!hit) {
    c.status = Status::Pass;
    c.reason = sym + " constituent dimensions " + dims_text(dm) + " reach none of the excluded dimensions";
    return c;
  }
  c.status = Status::Unknown;
  c.reason = sym + " constituent dimensions " + dims_text(dm) + " reach " + std::to_string(*hit);
  if (!src.has_group()) return c;

  Witness w;
  w.kind = "subrepresentation";
  w.degree = d;
  w.variables = src.degree();
  const FiniteMatrixGroup& g = src.group();
  for (const auto& [i, m] : mults) {
    if (t.irreducibles[static_cast<std::size_t>(i)].degree() != *hit) continue;
    auto iso = isotypic_basis(g, t, d, i);
    if (m == 1) {
      w.polynomials = iso;
    } else {
      for (const auto& v : iso) {
        auto span = g_span(g, d, v);
        if (static_cast<long long>(span.size()) == *hit) {
          w.polynomials = span;
          break;
        }
      }
      if (w.polynomials.empty()) w.polynomials = iso;
    }
    w.detail = "irreducible constituent " + std::to_string(i) + " of dimension " + std::to_string(*hit) +
               " with multiplicity " + std::to_string(m);
    break;
  }
  if (w.polynomials.empty()) {
    // Only reachable as a sum of smaller constituents: emit their isotypic components.
    std::vector<char> used(t.irreducibles.size(), 0);
    long long left = *hit;
    for (const auto& [i, m] : mults) {
      const long long dim = t.irreducibles[static_cast<std::size_t>(i)].degree();
      if (dim > left) continue;
      std::vector<std::pair<long long, long long>> rest;
      for (const auto& [j, mj] : mults)
        if (j > i) rest.emplace_back(t.irreducibles[static_cast<std::size_t>(j)].degree(), mj);
      for (long long take = std::min(m, left / dim); take >= 1; --take)
        if (subrep_dimension_reachable(rest, left - take * dim)) {
          used[static_cast<std::size_t>(i)] = 1;
          left -= take * dim;
          break;
        }
      if (left == 0) break;
    }
    std::string parts;
    for (std::size_t i = 0; i < used.size(); ++i)
      if (used[i]) {
        for (auto& v : isotypic_basis(g, t, d, static_cast<int>(i))) w.polynomials.push_back(std::move(v));
        parts += (parts.empty() ? "" : ", ") + std::to_string(i);
      }
    w.detail = "isotypic components of constituents " + parts + " contain a subrepresentation of dimension " +
               std::to_string(*hit);
  }
  for (auto& v : w.polynomials) v = normalize_leading(v);
  c.witness = w;
  return c;
}

// An invariant Segre P^1 x P^2 gives V = A (x) B projectively, so End(V) = V (x) V^dual
// contains sl(A), and the net of quadrics cutting it out is 3-dimensional. Either
// space lacking a 3-dimensional subrepresentation excludes the scroll.
ConditionResult scroll_condition(Source& src) {
  auto c = subrep_condition(src, "no invariant cubic scroll", 2, {3});
  if (c.status == Status::Pass) return c;
  const CharacterTable& t = src.table();
  ClassFunction end = src.natural();
  const ClassFunction dual = dual_character(src.natural());
  for (std::size_t i = 0; i < end.values.size(); ++i) end.values[i] = end.values[i] * dual.values[i];
  std::vector<std::pair<long long, long long>> dm;
  for (const auto& [i, m] : constituent_multiplicities(end, t))
    dm.emplace_back(t.irreducibles[static_cast<std::size_t>(i)].degree(), m);
  if (!subrep_dimension_reachable(dm, 3)) {
    c.status = Status::Pass;
    c.reason += "; V (x) V^dual constituent dimensions " + dims_text(dm) + " do not reach 3";
    c.witness.reset();
  } else {
    c.reason += "; V (x) V^dual constituent dimensions " + dims_text(dm) + " reach 3";
  }
  return c;
}

void finish(VerdictReport& r, bool necessary_ok, bool proxies_ok) {
  if (!necessary_ok)
    r.verdict = Verdict::NotWeaklyExceptional;
  else if (!proxies_ok)
    r.verdict = Verdict::Inconclusive;
  else
    r.verdict = Verdict::WeaklyExceptional;
}

}  // namespace

VerdictReport check_dim2_3(Source& src) {
  require_degree(src, {2, 3});
  const int n = src.degree();
  VerdictReport r = base_report(src, n == 2 ? "dim-2 criterion" : "dim-3 criterion",
                                n == 2 ? "degree 2 without reflections: weakly-exceptional iff s_1 = 0"
                                       : "degree 3 without reflections: weakly-exceptional iff s_1 = s_2 = 0");
  auto tr = transitivity(src);
  tr.name = "transitive (informational)";
  r.conditions.push_back(tr);
  finish(r, semi_invariant_conditions(src, n - 1, r), true);
  return r;
}

VerdictReport check_dim4(Source& src) {
  require_degree(src, {4});
  VerdictReport r = base_report(src, "dim-4 criterion",
                                "degree 4 without reflections: weakly-exceptional iff transitive, s_d = 0 for d <= 3 and "
                                "no invariant twisted cubic; a twisted cubic would force a 3-dimensional invariant "
                                "space of quadrics in Sym^2(V^dual)");
  auto tr = transitivity(src);
  const bool trans = tr.status == Status::Pass;
  r.conditions.push_back(tr);
  if (!trans) {
    finish(r, false, true);
    return r;
  }
  if (!semi_invariant_conditions(src, 3, r)) {
    finish(r, false, true);
    return r;
  }
  auto c = subrep_condition(src, "no 3-dim subrepresentation in Sym^2(V^dual)", 2, {3});
  const bool ok = c.status == Status::Pass;
  r.conditions.push_back(std::move(c));
  finish(r, true, ok);
  return r;
}

VerdictReport check_dim5(Source& src) {
  require_degree(src, {5});
  VerdictReport r = base_report(src, "dim-5 criterion",
                                "degree 5 without reflections: weakly-exceptional iff transitive and s_d = 0 for d <= 4");
  auto tr = transitivity(src);
  const bool trans = tr.status == Status::Pass;
  r.conditions.push_back(tr);
  if (!trans) {
    finish(r, false, true);
    return r;
  }
  finish(r, semi_invariant_conditions(src, 4, r), true);
  return r;
}

VerdictReport check_dim6(Source& src) {
  require_degree(src, {6});
  VerdictReport r = base_report(
      src, "dim-6 criterion",
      "degree 6 without reflections: transitivity and s_d = 0 for d <= 5 are necessary; weakly-exceptional when, in "
      "addition, no invariant rational cubic scroll, no invariant complete intersection of two quadrics and no "
      "invariant degree-6 sectional-genus-3 threefold exist; checked here through invariant subspaces: a scroll needs "
      "3-dimensional ones in both Sym^2(V^dual) and V (x) V^dual, two quadrics a 2-dimensional one in Sym^2(V^dual), "
      "the threefold one of dimension 2, 3 or 4 in Sym^3(V^dual)");
  auto tr = transitivity(src);
  const bool trans = tr.status == Status::Pass;
  r.conditions.push_back(tr);
  if (!trans) {
    finish(r, false, true);
    return r;
  }
  if (!semi_invariant_conditions(src, 5, r)) {
    finish(r, false, true);
    return r;
  }
  bool ok = true;
  for (auto c : {scroll_condition(src),
                 subrep_condition(src, "no 2-dim subrepresentation in Sym^2(V^dual)", 2, {2}),
                 subrep_condition(src, "no 2-, 3- or 4-dim subrepresentation in Sym^3(V^dual)", 3, {2, 3, 4})}) {
    ok = ok && c.status == Status::Pass;
    r.conditions.push_back(std::move(c));
  }
  finish(r, true, ok);
  return r;
}

VerdictReport check_diagonal(Source& src, int k) {
  if (!src.has_group()) throw Error(ErrorKind::Validation, "NeedsGroup", "the diagonal rule needs an explicit group");
  const FiniteMatrixGroup& g = src.group();
  if (k < g.degree())
    throw domain_error("KTooSmall", "k = " + std::to_string(k) + " is smaller than the degree " + std::to_string(g.degree()));
  VerdictReport r = base_report(src, "diagonal-torus criterion",
                                "contains the diagonal subgroup Z_k^n (k >= n+1) in the given coordinates and acts "
                                "irreducibly: weakly-exceptional; the criterion is sufficient only");
  ConditionResult torus;
  torus.name = "contains diagonal torus (k = " + std::to_string(k) + ")";
  if (contains_diagonal_torus(g, k)) {
    torus.status = Status::Pass;
    torus.reason = "all generators gamma_1..gamma_" + std::to_string(g.degree() - 1) + " are elements";
  } else {
    torus.status = Status::Unknown;
    torus.reason = "some gamma_i is not an element in the given coordinates";
    Witness w;
    w.kind = "torus";
    w.detail = "literal containment only";
    torus.witness = w;
  }
  auto tr = transitivity(src);
  if (tr.status == Status::Fail) tr.status = Status::Unknown;  // sufficiency rule: nothing is refuted
  const bool ok = torus.status == Status::Pass && tr.status == Status::Pass;
  r.conditions.push_back(std::move(torus));
  r.conditions.push_back(std::move(tr));
  finish(r, true, ok);
  return r;
}

std::optional<VerdictReport> check_heisenberg_pattern(Source& src) {
  const int p = src.degree();
  if (p < 3 || !is_prime(p)) return std::nullopt;
  const auto& cs = *src.classes();
  const std::size_t p3 = static_cast<std::size_t>(p) * p * p;
  if (cs.order != p3) return std::nullopt;
  if (cs.class_count() == cs.order) return std::nullopt;  // abelian
  for (int o : cs.element_orders)
    if (p % o != 0) return std::nullopt;
  VerdictReport r = base_report(src, "Heisenberg criterion",
                                "extraspecial group of order p^3 and exponent p acting irreducibly in degree p: "
                                "weakly-exceptional");
  ConditionResult shape;
  shape.name = "extraspecial of order p^3 and exponent p";
  shape.status = Status::Pass;
  shape.reason = "order " + std::to_string(cs.order) + ", non-abelian, exponent " + std::to_string(p);
  r.conditions.push_back(shape);
  auto tr = transitivity(src);
  const bool ok = tr.status == Status::Pass;
  if (!ok) return std::nullopt;
  r.conditions.push_back(tr);
  r.verdict = Verdict::WeaklyExceptional;
  return r;
}

VerdictReport verdict(Source& src, RuleHint hint) {
  if (src.has_group()) {
    if (auto w = contains_reflections(src.group())) {
      VerdictReport r = base_report(src, "reflection preemption",
                                    "the criteria apply to groups without reflections; remove reflections first");
      ConditionResult c;
      c.name = "no reflections";
      c.status = Status::Fail;
      c.reason = "element " + std::to_string(*w) + " is a reflection";
      Witness wit;
      wit.kind = "reflection";
      wit.element = src.group().element(*w);
      c.witness = wit;
      r.conditions.push_back(std::move(c));
      r.verdict = Verdict::ReflectionsPresent;
      return r;
    }
  }
  if (hint.kind == RuleHint::Kind::Diagonal) return check_diagonal(src, hint.k);
  switch (src.degree()) {
    case 2:
    case 3: return check_dim2_3(src);
    case 4: return check_dim4(src);
    case 5: return check_dim5(src);
    case 6: return check_dim6(src);
    default: break;
  }
  if (hint.kind == RuleHint::Kind::Auto) {
    if (auto r = check_heisenberg_pattern(src)) return *r;
    if (src.has_group()) {
      const int e = src.group().exponent();
      for (int k = src.degree(); k <= e; ++k) {
        if (e % k != 0) continue;
        if (!contains_diagonal_torus(src.group(), k)) continue;
        VerdictReport r = check_diagonal(src, k);
        if (r.verdict == Verdict::WeaklyExceptional) return r;
      }
    }
  }
  VerdictReport r = base_report(src, "none", "no criterion covers this input");
  ConditionResult c;
  c.name = "applicable criterion";
  c.status = Status::Unknown;
  c.reason = "no applicable criterion";
  r.conditions.push_back(std::move(c));
  r.verdict = Verdict::Inconclusive;
  return r;
}

}  // namespace wex
