#pragma once

#include <gmpxx.h>

#include <random>
#include <vector>

#include "wex/bookkeeping.hpp"

namespace padic_samples {

// Reduced numerators of P(shift + i), i = 0..d, evaluated directly in GMP.
inline std::vector<mpz_class> value_numerators(const wex::PadicInstance& inst) {
  std::vector<mpz_class> out;
  const int d = inst.degree();
  for (int i = 0; i <= d; ++i) {
    const mpq_class x(static_cast<long>(inst.shift + i));
    mpq_class v = 0, pw = 1;
    for (int j = 0; j <= d; ++j) {
      v += inst.coefficients[static_cast<std::size_t>(j)].to_mpq() * pw;
      pw *= x;
    }
    v.canonicalize();
    out.push_back(v.get_num());
  }
  return out;
}

inline bool divides(long p, const mpz_class& z) { return mpz_divisible_ui_p(z.get_mpz_t(), static_cast<unsigned long>(p)) != 0; }

inline bool hypothesis_oracle(const wex::PadicInstance& inst) {
  for (const auto& r : value_numerators(inst))
    if (!divides(inst.prime, r)) return false;
  return true;
}

inline bool conclusion_oracle(const wex::PadicInstance& inst) {
  for (const auto& b : inst.coefficients)
    if (!divides(inst.prime, b.to_mpq().get_num())) return false;
  return true;
}

// Random instance with degree below p; numerators and denominators carry
// random powers of p so that reductions across p happen often.
inline wex::PadicInstance random_instance(long p, std::mt19937_64& rng) {
  wex::PadicInstance inst;
  inst.prime = p;
  inst.shift = static_cast<long long>(rng() % 101) - 50;
  const int d = static_cast<int>(rng() % static_cast<unsigned long>(p));
  for (int i = 0; i <= d; ++i) {
    long long num = static_cast<long long>(rng() % 61) - 30;
    long long den = static_cast<long long>(rng() % 12) + 1;
    const unsigned pn = static_cast<unsigned>(rng() % 4), pd = static_cast<unsigned>(rng() % 3);
    for (unsigned k = 0; k < std::min(pn, 2u); ++k) num *= p;
    if (pd == 2) den *= p;
    inst.coefficients.push_back(wex::Rational(num, den));
  }
  return inst;
}

// `count` instances whose hypothesis holds, found by rejection sampling.
inline std::vector<wex::PadicInstance> hypothesis_instances(long p, int count, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::vector<wex::PadicInstance> out;
  while (static_cast<int>(out.size()) < count) {
    auto inst = random_instance(p, rng);
    if (hypothesis_oracle(inst)) out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace padic_samples
