#include <catch_amalgamated.hpp>

#include <algorithm>
#include <gmpxx.h>
#include <random>
#include <set>

#include "padic_samples.hpp"
#include "wex/bookkeeping.hpp"
#include "wex/error.hpp"

using namespace wex;

namespace {

mpq_class q(const Rational& r) { return r.to_mpq(); }

// Direct evaluation of the lct formula in GMP rationals.
mpq_class lct_oracle(long a, long b, long c) {
  std::vector<long> n{a, b, c};
  std::sort(n.begin(), n.end());
  mpq_class s = 0;
  for (long x : n) s += mpq_class(x, x + 1);
  mpq_class num = 1 - mpq_class(n[2], n[2] + 1);
  mpq_class res = num / (2 - s);
  res.canonicalize();
  return res;
}

}  // namespace

TEST_CASE("lct of Du Val points") {
  CHECK(lct_duval(1, 2, 4).lct == Rational(6));
  CHECK(lct_duval(1, 2, 3).lct == Rational(3));
  CHECK(lct_duval(1, 2, 2).lct == Rational(2));
  for (long long m = 1; m <= 10; ++m) CHECK(lct_duval(1, 1, m).lct == Rational(1));
  CHECK(lct_duval(4, 1, 2).lct == Rational(6));
  CHECK_THROWS_AS(lct_duval(2, 2, 2), Error);
  CHECK_THROWS_AS(lct_duval(1, 3, 5), Error);
  for (long a = 1; a <= 3; ++a)
    for (long b = a; b <= 6; ++b)
      for (long c = b; c <= 12; ++c) {
        mpq_class s = mpq_class(a, a + 1) + mpq_class(b, b + 1) + mpq_class(c, c + 1);
        if (s >= 2) {
          CHECK_THROWS(lct_duval(a, b, c));
          continue;
        }
        auto f = lct_duval(a, b, c);
        CHECK(q(f.lct) == lct_oracle(a, b, c));
        CHECK(f.lct > Rational(0));
      }
}

TEST_CASE("lct upper bound") {
  CHECK(lct_upper_bound(4, 2) == Rational(2, 5));
  for (long long n = 1; n < 8; ++n) CHECK(lct_upper_bound(n, n + 1) == Rational(1));
  CHECK(lct_upper_bound(5, 5) == Rational(5, 6));
  CHECK(lct_upper_bound(5, 5) < Rational(1));
}

TEST_CASE("Noether rank") {
  CHECK(noether_rank(-1, {}).picard_rank == 11);
  CHECK(noether_rank(2, {1, 1, 1, 1, 1, 1}).picard_rank == 2);
  CHECK(noether_rank(9, {}).picard_rank == 1);
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const long long k2 = static_cast<long long>(rng() % 20) - 10;
    std::vector<long long> mu(rng() % 5);
    for (auto& m : mu) m = rng() % 8;
    auto nd = noether_rank(k2, mu);
    long long sum = 0;
    for (auto m : mu) sum += m;
    CHECK(nd.picard_rank + nd.K2 + sum == 10);
    CHECK(noether_rank(10 - sum - nd.picard_rank, mu).picard_rank == nd.picard_rank);
  }
}

TEST_CASE("surface candidates in P4") {
  auto r = surface_candidates_p4();
  std::vector<long long> hh;
  for (const auto& s : r.survivors) {
    hh.push_back(s.HH);
    CHECK(s.HH - s.HK == 8);
    CHECK(s.h0_quadrics == 6 - s.HH);
    CHECK(s.h0_quadrics >= 0);
  }
  CHECK(hh == std::vector<long long>{3, 4, 6});
  std::map<std::string, std::string> rules;
  for (const auto& t : r.trace)
    if (!t.kept) rules[t.candidate] = t.rule;
  CHECK(rules == std::map<std::string, std::string>{{"HH=5", "semi-invariant of degree 2"},
                                                    {"HH=7", "negative quadric count"}});
  std::vector<long long> order{3, 4, 5, 6, 7};
  do {
    auto p = surface_candidates_p4(order);
    CHECK(p.survivors.size() == r.survivors.size());
    CHECK(p.trace.size() == r.trace.size());
    for (std::size_t i = 0; i < p.trace.size(); ++i) CHECK(p.trace[i].detail == r.trace[i].detail);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("threefold survivor in P5") {
  auto b = threefold_survivor_p5();
  CHECK(b.d == 6);
  CHECK(b.k == 8);
  CHECK(b.h0_cubics == 4);
  CHECK(b.sectional_genus == 3);
  CHECK(b.gamma == Rational(24));
  CHECK(b.h0_values == std::array<long long, 3>{6, 21, 52});
  CHECK(b.d + b.k / 2 == 10);
  CHECK(b.h0_cubics == b.k / 2);
  // Riemann-Roch at n = 1, 2, 3 written out independently.
  for (long n = 1; n <= 3; ++n) {
    const long d = static_cast<long>(b.d), k = static_cast<long>(b.k);
    mpq_class v = mpq_class(d * n * n * n, 6) + mpq_class(k * n * n, 4) + q(b.gamma) * mpq_class(n, 12) + 1;
    v.canonicalize();
    CHECK(v == static_cast<long>(b.h0_values[static_cast<std::size_t>(n - 1)]));
  }
  std::set<std::string> rules;
  for (const auto& t : b.trace)
    if (!t.kept) rules.insert(t.rule);
  CHECK(rules == std::set<std::string>{"d >= 5", "invariant cubic", "pencil of cubics", "genus-1", "septic"});

  std::vector<long long> order{1, 2, 3, 4, 5, 6, 7, 8, 9};
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    std::shuffle(order.begin(), order.end(), rng);
    auto p = threefold_survivor_p5(order);
    CHECK(p.d == 6);
    CHECK(p.trace.size() == b.trace.size());
    for (std::size_t j = 0; j < p.trace.size(); ++j) CHECK(p.trace[j].rule == b.trace[j].rule);
  }
  CHECK_THROWS_AS(threefold_survivor_p5({6, 6}), Error);
  CHECK_THROWS_AS(threefold_survivor_p5({5, 7}), Error);
}

TEST_CASE("subvariety bounds") {
  auto a = subvariety_bounds(5, 3);
  CHECK(a.degree_bound == 10);
  CHECK(a.cubic_count_bound == 5);
  auto b = subvariety_bounds(5, 2);
  CHECK(b.degree_bound == 10);
  CHECK(b.cubic_count_bound == 10);
  for (long long n = 1; n < 10; ++n) {
    auto c = subvariety_bounds(n, 0);
    CHECK(c.degree_bound == 1);
    CHECK(c.cubic_count_bound == n);
  }
  CHECK_THROWS_AS(subvariety_bounds(5, 5), Error);
  CHECK_THROWS_AS(subvariety_bounds(5, -1), Error);
}

TEST_CASE("p-adic divisibility") {
  auto ex1 = padic_check({{Rational(5), Rational(5), Rational(5)}, 0, 5});
  CHECK(ex1.hypothesis);
  CHECK(ex1.conclusion);
  auto ex2 = padic_check({{Rational(0), Rational(1), Rational(1)}, 0, 3});
  CHECK_FALSE(ex2.hypothesis);
  CHECK_THROWS_AS(padic_check({{Rational(1), Rational(1), Rational(1), Rational(1)}, 0, 3}), Error);
  CHECK_THROWS_AS(padic_check({{Rational(1)}, 0, 4}), Error);

  for (long p : {3L, 5L, 7L}) {
    std::mt19937_64 rng(static_cast<unsigned long>(p) * 1000003UL);
    int hyp_true = 0;
    for (int n = 0; n < 1000; ++n) {
      const int d = static_cast<int>(rng() % static_cast<unsigned long>(p));
      const int mode = n % 4;
      std::vector<Rational> coeffs;
      for (int i = 0; i <= d; ++i) {
        long b = static_cast<long>(rng() % 41) - 20;
        long c = static_cast<long>(rng() % 12) + 1;
        if (mode == 1) b *= p;                                  // divisible numerators
        if (mode == 2 && c % p == 0) ++c;                       // denominators prime to p
        if (mode == 2) b *= p;
        if (mode == 3) c *= p;                                  // p in the denominators
        coeffs.push_back(Rational(b, c));
      }
      const long gamma = static_cast<long>(rng() % 61) - 30;
      PadicInstance inst{coeffs, gamma, p};
      auto res = padic_check(inst);

      // Oracle: evaluate with GMP and test divisibility of reduced numerators.
      bool hyp = true, concl = true;
      for (int i = 0; i <= d; ++i) {
        mpq_class v = 0, x = gamma + i, pw = 1;
        for (int j = 0; j <= d; ++j) {
          v += q(coeffs[static_cast<std::size_t>(j)]) * pw;
          pw *= x;
        }
        v.canonicalize();
        if (mpz_class(v.get_num() % p) != 0) hyp = false;
      }
      for (const auto& c : coeffs)
        if (mpz_class(q(c).get_num() % p) != 0) concl = false;
      CHECK(res.hypothesis == hyp);
      CHECK(res.conclusion == concl);
      CHECK_FALSE((res.hypothesis && !res.conclusion));
      hyp_true += hyp ? 1 : 0;
    }
    CHECK(hyp_true >= 100);
  }
}

TEST_CASE("p-adic lemma on instances satisfying the hypothesis") {
  for (long p : {3L, 5L, 7L}) {
    const auto insts = padic_samples::hypothesis_instances(p, 1000, 42UL + static_cast<unsigned long>(p));
    REQUIRE(insts.size() == 1000);
    for (const auto& inst : insts) {
      const auto res = padic_check(inst);
      CHECK(res.hypothesis);
      CHECK(res.conclusion == padic_samples::conclusion_oracle(inst));
      CHECK(res.conclusion);
    }
  }
}
