#pragma once

#include <array>
#include <string>
#include <vector>

#include "wex/rational.hpp"

namespace wex {

struct DuValFork {
  std::array<long long, 3> arms{};          // sorted n1 <= n2 <= n3
  std::array<Rational, 3> coefficients{};  // n_i / (n_i + 1)
  Rational lct;
};

/// lct of a Du Val point from its fork arms. Throws NotLogFano.
DuValFork lct_duval(long long n1, long long n2, long long n3);

/// d / (n + 1): bound coming from a semi-invariant of degree d in P^n.
Rational lct_upper_bound(long long n, long long d);

struct NoetherData {
  long long K2 = 0;
  std::vector<long long> milnor;
  long long picard_rank = 0;
};

NoetherData noether_rank(long long K2, const std::vector<long long>& milnor);

/// One line of an elimination trace.
struct TraceEntry {
  std::string candidate;
  bool kept = false;
  std::string rule;
  std::string detail;
};

struct SurfaceBookkeeping {
  long long HH = 0;
  long long HK = 0;
  long long h0_quadrics = 0;
};

struct SurfaceResult {
  std::vector<SurfaceBookkeeping> survivors;  // sorted by HH
  std::vector<TraceEntry> trace;              // sorted by candidate
};

/// Degrees H.H of an invariant surface in P^4. `order` only permutes the
/// enumeration; an empty order means 3..7.
SurfaceResult surface_candidates_p4(const std::vector<long long>& order = {});

struct ThreefoldBookkeeping {
  long long d = 0;
  long long k = 0;
  Rational gamma;
  std::array<long long, 3> h0_values{};  // h0(O_X(nH)), n = 1, 2, 3
  long long h0_cubics = 0;
  long long sectional_genus = 0;
  std::vector<TraceEntry> trace;
};

/// The unique (d, k) for an invariant threefold in P^5. Throws
/// InternalInconsistency unless exactly one candidate survives.
ThreefoldBookkeeping threefold_survivor_p5(const std::vector<long long>& order = {});

struct SubvarietyBounds {
  long long n = 0;
  long long dimV = 0;
  long long degree_bound = 0;
  long long cubic_count_bound = 0;
};

/// Throws OutOfRange unless 0 <= dimV <= n - 1.
SubvarietyBounds subvariety_bounds(long long n, long long dimV);

struct PadicInstance {
  std::vector<Rational> coefficients;  // b_i / c_i, constant term first
  long long shift = 0;
  long long prime = 2;
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

struct PadicResult {
  bool hypothesis = false;
  bool conclusion = false;
  std::vector<Rational> values;  // P(shift + i), i = 0..d
};

/// Throws DegreeTooLarge when d >= p, NotPrime when p is not prime.
PadicResult padic_check(const PadicInstance& inst);

}  // namespace wex
