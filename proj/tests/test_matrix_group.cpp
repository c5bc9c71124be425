#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "wex/constructions.hpp"
#include "wex/error.hpp"
#include "wex/matrix_group.hpp"

using namespace wex;

namespace {

Matrix perm_matrix(const std::vector<int>& img) {
  const int n = static_cast<int>(img.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(img[static_cast<std::size_t>(i)], i) = Cyclotomic(1);
  return m;
}

FiniteMatrixGroup s3() { return closure({perm_matrix({1, 0, 2}), perm_matrix({1, 2, 0})}); }

std::multiset<int> class_sizes(const FiniteMatrixGroup& g) {
  std::multiset<int> s;
  for (const auto& c : g.classes()) s.insert(c.size);
  return s;
}

// Orbit partition under conjugation by every element.
int brute_force_class_count(const FiniteMatrixGroup& g) {
  const int n = static_cast<int>(g.order());
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  int count = 0;
  for (int x = 0; x < n; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    ++count;
    for (int h = 0; h < n; ++h) {
      Matrix y = *inverse(g.element(h)) * g.element(x) * g.element(h);
      seen[static_cast<std::size_t>(*g.index_of(y))] = 1;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(closure(heisenberg(3)).order() == 27);
  CHECK(s3().order() == 6);
  auto h5 = closure(heisenberg(5));
  CHECK(h5.order() == 125);
  for (const auto& m : h5.elements()) CHECK(determinant(m).is_one());
  CHECK_THROWS_AS(heisenberg(2), Error);
  CHECK_THROWS_AS(heisenberg(9), Error);
}

TEST_CASE("closure errors") {
  Matrix sing(2, 2);
  sing(0, 0) = Cyclotomic(1);
  CHECK_THROWS_WITH(closure({sing}), Catch::Matchers::ContainsSubstring("NotInvertible"));
  Matrix unip = Matrix::identity(2);
  unip(0, 1) = Cyclotomic(1);
  CHECK_THROWS_WITH(closure({unip}, 1000), Catch::Matchers::ContainsSubstring("InfiniteOrderSuspected"));
  try {
    closure(heisenberg(5), 100);
    FAIL("expected cap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(s3()) == std::multiset<int>{1, 2, 3});
  Matrix d = Matrix::diagonal({root_of_unity(5, 1)});
  auto z5 = closure({d});
  CHECK(z5.classes().size() == 5);
  auto h3 = closure(heisenberg(3));
  CHECK(h3.classes().size() == 11);
  CHECK(brute_force_class_count(h3) == 11);
  CHECK(brute_force_class_count(s3()) == 3);
  for (const auto* g : {&h3}) {
    std::size_t total = 0;
    for (const auto& c : g->classes()) {
      total += static_cast<std::size_t>(c.size);
      CHECK(g->order() % static_cast<std::size_t>(c.element_order) == 0);
    }
    CHECK(total == g->order());
  }
  CHECK(h3.classes()[0].representative == 0);
  CHECK(h3.element(0).is_identity());
  // sorted by (order, size, representative)
  for (std::size_t i = 1; i < h3.classes().size(); ++i) {
    const auto& a = h3.classes()[i - 1];
    const auto& b = h3.classes()[i];
    CHECK(std::tie(a.element_order, a.size, a.representative) < std::tie(b.element_order, b.size, b.representative));
  }
}

TEST_CASE("closure idempotence and determinism") {
  auto g = closure(heisenberg(3));
  auto again = closure(g.elements());
  CHECK(again.order() == g.order());
  auto g2 = closure(heisenberg(3));
  CHECK(g2.elements() == g.elements());
}

TEST_CASE("power maps") {
  auto g = s3();
  auto id = power_map(g, 1);
  for (std::size_t i = 0; i < id.size(); ++i) CHECK(id[i] == static_cast<int>(i));
  for (std::size_t i = 0; i < g.classes().size(); ++i)
    CHECK(power_map(g, g.classes()[i].element_order)[i] == 0);
  for (std::size_t i = 0; i < g.classes().size(); ++i)
    if (g.classes()[i].element_order == 2) CHECK(power_map(g, 2)[i] == 0);
  auto h = closure(heisenberg(3));
  for (int a : {2, 3, 5})
    for (int b : {2, 4, -1}) {
      auto pa = power_map(h, a), pb = power_map(h, b), pab = power_map(h, a * b);
      for (std::size_t i = 0; i < pa.size(); ++i) CHECK(pa[static_cast<std::size_t>(pb[i])] == pab[i]);
    }
}

TEST_CASE("commutator subgroup") {
  Matrix d = Matrix::diagonal({root_of_unity(5, 1), Cyclotomic(1)});
  Matrix e = Matrix::diagonal({Cyclotomic(1), Cyclotomic(-1)});
  CHECK(commutator_subgroup(closure({d, e})).order() == 1);
  CHECK(commutator_subgroup(s3()).order() == 3);

  auto h5 = closure(heisenberg(5));
  auto c = commutator_subgroup(h5);
  REQUIRE(c.order() == 5);
  // Brute-force oracle: every commutator of every pair lies in c, and c is the set of scalars.
  std::set<int> seen;
  for (int a = 0; a < 125; a += 7)
    for (int b = 0; b < 125; ++b) {
      Matrix x = *inverse(h5.element(a)) * *inverse(h5.element(b)) * h5.element(a) * h5.element(b);
      REQUIRE(c.index_of(x).has_value());
    }
  for (const auto& m : c.elements()) CHECK(m.is_scalar());
  // normality
  for (const auto& gen : h5.generators())
    for (const auto& m : c.elements()) CHECK(c.index_of(*inverse(gen) * m * gen).has_value());
}

TEST_CASE("central scalars") {
  auto h5 = closure(heisenberg(5));
  auto cs = central_scalars(h5);
  REQUIRE(cs.size() == 5);
  for (int j = 0; j < 5; ++j)
    CHECK(std::count(cs.begin(), cs.end(), root_of_unity(5, j)) == 1);
  CHECK(central_scalars(closure(3, {})) == std::vector<Cyclotomic>{Cyclotomic(1)});
  CHECK(central_scalars(s3()) == std::vector<Cyclotomic>{Cyclotomic(1)});
}

TEST_CASE("eigenvalue multiplicities") {
  Cyclotomic w = root_of_unity(3, 1);
  auto ev = eigenvalue_multiplicities(Matrix::diagonal({1, 1, 1, 1, w}));
  REQUIRE(ev.size() == 2);
  CHECK(ev[0].exponent == 0);
  CHECK(ev[0].multiplicity == 4);
  CHECK(ev[1].order == 3);
  CHECK(ev[1].exponent == 1);
  CHECK(ev[1].multiplicity == 1);
  auto sc = eigenvalue_multiplicities(Matrix::scalar(5, w));
  REQUIRE(sc.size() == 1);
  CHECK(sc[0].exponent == 1);
  CHECK(sc[0].multiplicity == 5);
  Cyclotomic i = root_of_unity(4, 1);
  Matrix dg = Matrix::diagonal({1, i, i * i});
  Matrix h = perm_matrix({2, 0, 1});
  h(0, 1) = Cyclotomic(Rational(1, 2));
  h(2, 2) = Cyclotomic(3);
  Matrix conj = *inverse(h) * dg * h;
  auto a = eigenvalue_multiplicities(dg), b = eigenvalue_multiplicities(conj);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].exponent == b[k].exponent);
    CHECK(a[k].multiplicity == b[k].multiplicity);
  }
}

TEST_CASE("reflections") {
  Cyclotomic w = root_of_unity(3, 1);
  CHECK(is_reflection(Matrix::diagonal({1, 1, 1, 1, w})));
  CHECK_FALSE(is_reflection(Matrix::scalar(5, w)));
  CHECK_FALSE(is_reflection(Matrix::diagonal({1, 1, 1, w, w * w})));
  CHECK(is_reflection(Matrix::diagonal({w, w, w, w, 1})));
  // degree 2: only elements fixing a line pointwise
  CHECK(is_reflection(Matrix::diagonal({1, -1})));
  CHECK_FALSE(is_reflection(Matrix::diagonal({root_of_unity(4, 1), root_of_unity(4, 3)})));
  auto g = s3();
  auto wit = contains_reflections(g);
  REQUIRE(wit.has_value());
  CHECK(g.element_order(*wit) == 2);
  CHECK_FALSE(contains_reflections(closure(heisenberg(5))).has_value());
}

TEST_CASE("diagonal torus") {
  auto g = closure(diagonal_group(3, 5, DiagonalPerm::Cyclic));
  CHECK(contains_diagonal_torus(g, 5));
  CHECK_FALSE(contains_diagonal_torus(closure(heisenberg(5)), 5));
  CHECK_FALSE(contains_diagonal_torus(closure(4, {}), 5));
  CHECK_THROWS_WITH(contains_diagonal_torus(g, 3), Catch::Matchers::ContainsSubstring("KTooSmall"));
  CHECK(closure(diagonal_group(2, 3, DiagonalPerm::Cyclic)).order() == 27);
  CHECK_THROWS_AS(diagonal_group(2, 2, DiagonalPerm::None), Error);
}
