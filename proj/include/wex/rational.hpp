#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace wex {

/// Exact rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are kept inline and
/// handled with 128-bit intermediate arithmetic; anything larger is promoted
/// to a GMP rational. The representation is canonical: a value that fits the
/// inline form is never stored as a GMP rational, so structural equality is
/// value equality and the hash is consistent with it.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);
  explicit Rational(const mpz_class& z);

  /// Parses "int" or "int/int" (optional leading sign, no whitespace).
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  /// Small-form accessors; valid only when fits_small().
  bool fits_small() const noexcept { return !big_; }
  std::int64_t small_num() const noexcept { return num_; }
  std::int64_t small_den() const noexcept { return den_; }

  std::string str() const;
  std::size_t hash() const;

  Rational operator-() const;
  Rational inverse() const;  // throws DivisionByZero on zero

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void assign_mpq(const mpq_class& q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace wex

template <>
struct std::hash<wex::Rational> {
  std::size_t operator()(const wex::Rational& r) const { return r.hash(); }
};
