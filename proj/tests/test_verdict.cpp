#include <catch_amalgamated.hpp>

#include "test_groups.hpp"
#include "wex/constructions.hpp"
#include "wex/error.hpp"
#include "wex/verdict.hpp"

using namespace wex;
using namespace testgroups;

namespace {

Source src_of(const std::vector<Matrix>& gens) { return Source::from_group(closure(gens)); }

const ConditionResult* find_condition(const VerdictReport& r, const std::string& prefix) {
  for (const auto& c : r.conditions)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

// Independent check that p spans a line stable under every generator's Sym^d action.
bool is_common_eigenvector(const FiniteMatrixGroup& g, int d, const Vector& p) {
  for (const auto& gen : g.generators()) {
    const Vector q = sym_power_matrix(gen, d) * p;
    if (rank(from_rows({p, q}, static_cast<int>(p.size()))) != 1) return false;
  }
  return true;
}

// Independent check that the span of `basis` is stable under every generator.
bool is_invariant_subspace(const FiniteMatrixGroup& g, int d, const std::vector<Vector>& basis) {
  const int r = rank(from_rows(basis, static_cast<int>(basis[0].size())));
  for (const auto& gen : g.generators()) {
    const Matrix m = sym_power_matrix(gen, d);
    std::vector<Vector> all = basis;
    for (const auto& v : basis) all.push_back(m * v);
    if (rank(from_rows(all, static_cast<int>(all[0].size()))) != r) return false;
  }
  return true;
}

void check_soundness(const FiniteMatrixGroup& g, const VerdictReport& r) {
  if (r.verdict != Verdict::NotWeaklyExceptional) return;
  bool found = false;
  for (const auto& c : r.conditions) {
    if (c.status != Status::Fail) continue;
    REQUIRE(c.witness);
    if (c.witness->kind == "semi_invariant") {
      REQUIRE(c.witness->polynomials.size() == 1);
      CHECK(is_common_eigenvector(g, c.witness->degree, c.witness->polynomials[0]));
    }
    found = true;
  }
  CHECK(found);
}

}  // namespace

TEST_CASE("dimension 5") {
  SECTION("Heisenberg p=5") {
    auto s = src_of(heisenberg(5));
    auto r = verdict(s);
    CHECK(r.verdict == Verdict::WeaklyExceptional);
    CHECK(r.rule == "dim-5 criterion");
    CHECK(r.group_order == std::size_t{125});
    for (int d = 1; d <= 4; ++d) CHECK(r.semi_invariants.at(d) == 0);
    for (const auto& c : r.conditions) CHECK(c.status == Status::Pass);
  }
  SECTION("A5 and S5") {
    for (const auto& gens : {a5_dim5(), s5_dim5()}) {
      auto s = src_of(gens);
      auto r = verdict(s);
      CHECK(r.verdict == Verdict::NotWeaklyExceptional);
      const auto* c = find_condition(r, "s_2");
      REQUIRE(c);
      CHECK(c->status == Status::Fail);
      CHECK(r.semi_invariants.at(2) >= 1);
      check_soundness(s.group(), r);
    }
  }
  SECTION("reducible") {
    auto s = src_of(reducible_dim5());
    auto r = verdict(s);
    CHECK(r.verdict == Verdict::NotWeaklyExceptional);
    const auto* c = find_condition(r, "transitive");
    REQUIRE(c);
    CHECK(c->status == Status::Fail);
    REQUIRE(c->witness);
    CHECK(c->witness->kind == "reducible");
    check_soundness(s.group(), r);
  }
  SECTION("rule agreement on the diagonal family") {
    auto s = src_of(diagonal_group(4, 5, DiagonalPerm::Cyclic));
    auto d5 = check_dim5(s);
    auto dg = check_diagonal(s, 5);
    CHECK(dg.verdict == Verdict::WeaklyExceptional);
    CHECK(d5.verdict != Verdict::Inconclusive);
    CHECK(d5.verdict != Verdict::NotWeaklyExceptional);
  }
}

TEST_CASE("dimensions 2 and 3") {
  auto h3 = src_of(heisenberg(3));
  auto r = verdict(h3);
  CHECK(r.verdict == Verdict::WeaklyExceptional);
  CHECK(r.rule == "dim-3 criterion");

  auto bi = src_of(binary_icosahedral());
  CHECK(bi.group().order() == 120);
  auto rb = verdict(bi);
  CHECK(rb.verdict == Verdict::WeaklyExceptional);
  CHECK(rb.rule == "dim-2 criterion");

  // A diagonal group in GL_2 fixes a line.
  Matrix d = Matrix::diagonal({root_of_unity(3, 1), root_of_unity(3, 2)});
  auto dd = src_of({d});
  auto rd = verdict(dd);
  CHECK(rd.verdict == Verdict::NotWeaklyExceptional);
  check_soundness(dd.group(), rd);

  auto tc = src_of(twisted_cubic_group());
  CHECK_THROWS_AS(check_dim2_3(tc), Error);
  CHECK_THROWS_AS(check_dim5(h3), Error);
}

TEST_CASE("dimension 4") {
  auto s = src_of(twisted_cubic_group());
  CHECK(s.group().order() == 120);
  auto r = verdict(s);
  CHECK(r.verdict == Verdict::Inconclusive);
  const auto* c = find_condition(r, "no 3-dim");
  REQUIRE(c);
  CHECK(c->status == Status::Unknown);
  REQUIRE(c->witness);
  CHECK(c->witness->polynomials.size() == 3);
  CHECK(is_invariant_subspace(s.group(), 2, c->witness->polynomials));

  auto p = src_of({perm_matrix({1, 2, 0, 3}), perm_matrix({1, 0, 3, 2})});
  CHECK(verdict(p).verdict == Verdict::NotWeaklyExceptional);
}

TEST_CASE("dimension 6 tensor groups") {
  // 2.A5 (x) A4 carries quartic semi-invariants.
  auto a4 = src_of(tensor_2a5_a4());
  CHECK(a4.group().order() == 1440);
  auto ra = verdict(a4);
  CHECK(ra.verdict == Verdict::NotWeaklyExceptional);
  CHECK(ra.semi_invariants.at(4) == 3);
  check_soundness(a4.group(), ra);

  auto h3 = src_of(tensor_2a5_h3());
  CHECK(h3.group().order() == 3240);
  auto r = verdict(h3);
  CHECK(r.verdict == Verdict::Inconclusive);
  for (int d = 1; d <= 5; ++d) CHECK(r.semi_invariants.at(d) == 0);
  const auto* c = find_condition(r, "no invariant cubic scroll");
  REQUIRE(c);
  CHECK(c->status == Status::Unknown);
  REQUIRE(c->witness);
  CHECK(c->witness->polynomials.size() == 3);
  CHECK(is_invariant_subspace(h3.group(), 2, c->witness->polynomials));
  const auto* two = find_condition(r, "no 2-dim");
  REQUIRE(two);
  CHECK(two->status == Status::Pass);
  for (const auto& cond : r.conditions)
    if (cond.witness && cond.witness->kind == "subrepresentation")
      CHECK(is_invariant_subspace(h3.group(), cond.witness->degree, cond.witness->polynomials));
}

TEST_CASE("diagonal rule") {
  auto full = src_of(diagonal_group(4, 5, DiagonalPerm::Cyclic));
  CHECK(full.group().order() == 3125);
  RuleHint hint{RuleHint::Kind::Diagonal, 5};
  CHECK(verdict(full, hint).verdict == Verdict::WeaklyExceptional);

  auto bare = src_of(diagonal_group(4, 5, DiagonalPerm::None));
  auto rb = verdict(bare, hint);
  CHECK(rb.verdict == Verdict::Inconclusive);
  CHECK(find_condition(rb, "transitive")->status != Status::Pass);

  auto h5 = src_of(heisenberg(5));
  CHECK(verdict(h5, hint).verdict == Verdict::Inconclusive);
  CHECK_THROWS_AS(check_diagonal(h5, 4), Error);
}

TEST_CASE("other degrees") {
  auto h7 = src_of(heisenberg(7));
  auto r = verdict(h7);
  CHECK(r.verdict == Verdict::WeaklyExceptional);
  CHECK(r.rule == "Heisenberg criterion");

  std::vector<int> cyc(7);
  for (int i = 0; i < 7; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % 7;
  auto c7 = src_of({perm_matrix(cyc)});
  auto rc = verdict(c7);
  CHECK(rc.verdict == Verdict::Inconclusive);
  CHECK(rc.conditions.back().reason == "no applicable criterion");
}

TEST_CASE("reflections preempt") {
  auto s = src_of(s3_perm());
  auto r = verdict(s);
  CHECK(r.verdict == Verdict::ReflectionsPresent);
  REQUIRE(r.conditions.front().witness);
  REQUIRE(r.conditions.front().witness->element);
  CHECK(is_reflection(*r.conditions.front().witness->element));
}

TEST_CASE("table path agrees with group path") {
  for (const auto& gens : {heisenberg(5), a5_dim5(), heisenberg(3), twisted_cubic_group()}) {
    auto g = src_of(gens);
    CharacterTable t = g.table();
    auto ts = Source::from_table(t);
    auto rg = verdict(g);
    auto rt = verdict(ts);
    CHECK(rg.verdict == rt.verdict);
    CHECK(rg.semi_invariants == rt.semi_invariants);
    CHECK(!rt.group_order);
  }
}
