#include "wex/bookkeeping.hpp"

#include <algorithm>
#include <map>

#include "wex/constructions.hpp"
#include "wex/error.hpp"

namespace wex {

DuValFork lct_duval(long long n1, long long n2, long long n3) {
  DuValFork f;
  f.arms = {n1, n2, n3};
  std::sort(f.arms.begin(), f.arms.end());
  if (f.arms[0] < 1) throw domain_error("OutOfRange", "fork arms must be positive");
  Rational sum;
  for (int i = 0; i < 3; ++i) {
    f.coefficients[i] = Rational(f.arms[i], f.arms[i] + 1);
    sum += f.coefficients[i];
  }
  if (sum >= Rational(2))
    throw domain_error("NotLogFano", "sum of different coefficients is " + sum.str() + ", not below 2");
  f.lct = (Rational(1) - f.coefficients[2]) / (Rational(2) - sum);
  return f;
}

Rational lct_upper_bound(long long n, long long d) {
  if (n < 1 || d < 1) throw domain_error("OutOfRange", "need n >= 1 and d >= 1");
  return Rational(d, n + 1);
}

NoetherData noether_rank(long long K2, const std::vector<long long>& milnor) {
  NoetherData out{K2, milnor, 10 - K2};
  for (long long mu : milnor) out.picard_rank -= mu;
  return out;
}

SurfaceResult surface_candidates_p4(const std::vector<long long>& order) {
  // -HK >= 1 with HK = HH - 8 gives HH <= 7; HH >= 3 for a non-degenerate surface.
  std::vector<long long> cands = order.empty() ? std::vector<long long>{3, 4, 5, 6, 7} : order;
  SurfaceResult res;
  for (long long hh : cands) {
    SurfaceBookkeeping s{hh, hh - 8, 6 - hh};
    TraceEntry t;
    t.candidate = "HH=" + std::to_string(hh);
    if (-s.HK < 1) {
      t.rule = "anticanonical degree";
      t.detail = "-HK = " + std::to_string(-s.HK) + " < 1";
    } else if (hh < 3) {
      t.rule = "non-degenerate";
      t.detail = "HH = " + std::to_string(hh) + " < 3";
    } else if (s.h0_quadrics < 0) {
      t.rule = "negative quadric count";
      t.detail = "h0(I(2)) = 6 - HH = " + std::to_string(s.h0_quadrics);
    } else if (s.h0_quadrics == 1) {
      t.rule = "semi-invariant of degree 2";
      t.detail = "h0(I(2)) = 1: the unique quadric through S is a semi-invariant";
    } else {
      t.kept = true;
      t.rule = "HH - HK = 8";
      t.detail = "HK = " + std::to_string(s.HK) + ", h0(I(2)) = " + std::to_string(s.h0_quadrics);
      res.survivors.push_back(s);
    }
    res.trace.push_back(std::move(t));
  }
  std::sort(res.survivors.begin(), res.survivors.end(),
            [](const SurfaceBookkeeping& a, const SurfaceBookkeeping& b) { return a.HH < b.HH; });
  std::sort(res.trace.begin(), res.trace.end(),
            [](const TraceEntry& a, const TraceEntry& b) { return a.candidate < b.candidate; });
  return res;
}

namespace {

// chi(O_X(nH)) = d n^3/6 + k n^2/4 + gamma n/12 + 1
Rational rr(long long d, long long k, const Rational& gamma, long long n) {
  return Rational(d * n * n * n, 6) + Rational(k * n * n, 4) + gamma * Rational(n, 12) + Rational(1);
}

}  // namespace

ThreefoldBookkeeping threefold_survivor_p5(const std::vector<long long>& order) {
  // k >= 1 and 10 = d + k/2 leave d <= 9.
  std::vector<long long> cands = order.empty() ? std::vector<long long>{1, 2, 3, 4, 5, 6, 7, 8, 9} : order;
  std::vector<ThreefoldBookkeeping> survivors;
  std::vector<TraceEntry> trace;
  for (long long d : cands) {
    ThreefoldBookkeeping b;
    b.d = d;
    b.k = 2 * (10 - d);
    // h0(O(1)) = 6 fixes gamma; h0(O(2)) = 21 must then hold identically.
    b.gamma = (Rational(6) - rr(d, b.k, Rational(0), 1)) * Rational(12);
    if (rr(d, b.k, b.gamma, 2) != Rational(21))
      throw internal_error("InternalInconsistency", "h0(O(2)) != 21 at d = " + std::to_string(d));
    const Rational cubic = Rational(56) - rr(d, b.k, b.gamma, 3);
    if (cubic != Rational(b.k / 2))
      throw internal_error("InternalInconsistency", "h0(I(3)) != k/2 at d = " + std::to_string(d));
    b.h0_cubics = b.k / 2;
    for (int n = 1; n <= 3; ++n) b.h0_values[static_cast<std::size_t>(n - 1)] = rr(d, b.k, b.gamma, n).small_num();
    b.sectional_genus = 1 + (2 * d - b.k) / 2;  // (K + 2H).H^2 = 2d - k = 2g - 2

    TraceEntry t;
    t.candidate = "d=" + std::to_string(d);
    const std::string vals = "k = " + std::to_string(b.k) + ", h0(I(3)) = " + std::to_string(b.h0_cubics);
    if (d < 5) {
      t.rule = "d >= 5";
      t.detail = "low degree threefolds are quadric intersections or degenerate";
    } else if (d == 9) {
      t.rule = "invariant cubic";
      t.detail = vals + ": the unique cubic through X is a semi-invariant of degree 3";
    } else if (d == 8) {
      t.rule = "pencil of cubics";
      t.detail = vals + ": residual intersection of the pencil is an invariant linear space";
    } else if (d == 5) {
      t.rule = "genus-1";
      t.detail = vals + ", sectional genus " + std::to_string(b.sectional_genus) +
                 ": contradicts the classification of genus-1 polarized threefolds";
    } else if (d == 7) {
      t.rule = "septic";
      t.detail = vals + ": curve sections of genus 5 and degree 7 force a surface of general type";
    } else {
      t.kept = true;
      t.rule = "10 = d + k/2";
      t.detail = vals + ", gamma = " + b.gamma.str() + ", sectional genus " + std::to_string(b.sectional_genus);
      survivors.push_back(b);
    }
    trace.push_back(std::move(t));
  }
  if (survivors.size() != 1)
    throw internal_error("InternalInconsistency", std::to_string(survivors.size()) + " candidates survive");
  std::sort(trace.begin(), trace.end(), [](const TraceEntry& a, const TraceEntry& b) { return a.candidate < b.candidate; });
  ThreefoldBookkeeping out = survivors.front();
  out.trace = std::move(trace);
  return out;
}

SubvarietyBounds subvariety_bounds(long long n, long long dimV) {
  if (n < 1 || dimV < 0 || dimV > n - 1)
    throw domain_error("OutOfRange", "need 0 <= dimV <= n - 1, got n = " + std::to_string(n) +
                                         ", dimV = " + std::to_string(dimV));
  auto binom = [](long long a, long long b) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    if (!r.fits_slong_p()) throw domain_error("OutOfRange", "binomial too large");
    return static_cast<long long>(r.get_si());
  };
  return {n, dimV, binom(n, dimV), binom(n, dimV + 1)};
}

PadicResult padic_check(const PadicInstance& inst) {
  if (inst.coefficients.empty()) throw domain_error("OutOfRange", "empty polynomial");
  if (!is_prime(inst.prime)) throw domain_error("NotPrime", std::to_string(inst.prime) + " is not prime");
  const int d = inst.degree();
  if (d >= inst.prime)
    throw domain_error("DegreeTooLarge", "degree " + std::to_string(d) + " >= p = " + std::to_string(inst.prime));
  const mpz_class p(static_cast<long>(inst.prime));
  PadicResult res;
  res.hypothesis = true;
  for (int i = 0; i <= d; ++i) {
    const Rational x(inst.shift + i);
    Rational v;
    for (int j = d; j >= 0; --j) v = v * x + inst.coefficients[static_cast<std::size_t>(j)];
    if (!mpz_divisible_p(v.numerator().get_mpz_t(), p.get_mpz_t())) res.hypothesis = false;
    res.values.push_back(v);
  }
  res.conclusion = true;
  for (const auto& b : inst.coefficients)
    if (!mpz_divisible_p(b.numerator().get_mpz_t(), p.get_mpz_t())) res.conclusion = false;
  return res;
}

}  // namespace wex
