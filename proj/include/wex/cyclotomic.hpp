#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wex/rational.hpp"

namespace wex {

namespace detail {
struct CycloField;
}

/// Exact element of the cyclotomic field Q(zeta_m).
///
/// Stored as phi(m) rational coordinates in the power basis
/// {1, z, ..., z^(phi(m)-1)} after reduction modulo the m-th cyclotomic
/// polynomial, where z = exp(2 pi i / m). At a fixed conductor this form is
/// unique, so coefficient equality is field equality and hashing is sound.
/// Binary operations on different conductors embed both operands into
/// Q(zeta_lcm) first.
class Cyclotomic {
 public:
  /// Zero at conductor 1.
  Cyclotomic();
  Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long long n) : Cyclotomic(Rational(n)) {}  // NOLINT(google-explicit-constructor)

  /// Zero at conductor m.
  static Cyclotomic zero(int m);
  static Cyclotomic from_rational(const Rational& r, int m);
  /// Takes arbitrary-length power-basis coordinates and reduces them.
  static Cyclotomic from_powers(int m, std::span<const Rational> powers);

  int conductor() const noexcept;
  int degree() const noexcept;  // phi(conductor)
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept;
  /// Throws NotRational when the value has irrational part.
  Rational to_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic inverse() const;
  /// Complex conjugate (the automorphism z -> z^-1).
  Cyclotomic conj() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  /// Multiplies by a rational scalar without changing conductor.
  Cyclotomic scaled(const Rational& r) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Hash of the reduced form; equal values at equal conductor hash equal.
  std::size_t hash() const;

  /// Canonical literal in the grammar `expr := term (('+'|'-') term)*`,
  /// with `z` meaning zeta at the given conductor (defaults to own).
  std::string to_literal() const;
  std::string to_literal(int m) const;

  /// Parses a literal at conductor m. Throws ParseError with the offending
  /// character offset.
  static Cyclotomic parse(std::string_view text, int m);

 private:
  const detail::CycloField* field_;
  std::vector<Rational> coeffs_;

  friend Cyclotomic cyclo_embed(const Cyclotomic& a, int m2);
  friend Cyclotomic cyclo_galois(const Cyclotomic& a, long long k);
  friend Cyclotomic root_of_unity(int m, long long j);
};

/// zeta_m^(j mod m) at conductor m.
Cyclotomic root_of_unity(int m, long long j);

/// The primitive k-th root power zeta_k^j expressed at conductor m, when it
/// lies in Q(zeta_m); std::nullopt otherwise.
std::optional<Cyclotomic> root_of_unity_in(int m, int k, long long j);

enum class CycloOp { Add, Sub, Mul, Div };
Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, CycloOp op);

/// Field automorphism z -> z^k; requires gcd(k, m) = 1 (NotCoprime).
Cyclotomic cyclo_galois(const Cyclotomic& a, long long k);

/// Same value written at conductor m2; requires conductor | m2 (NotAMultiple).
Cyclotomic cyclo_embed(const Cyclotomic& a, int m2);

/// The same value written at conductor m when every power of zeta that
/// occurs in it lies in Q(zeta_m); std::nullopt otherwise.
std::optional<Cyclotomic> rewrite_at_conductor(const Cyclotomic& a, int m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(int m);

int euler_phi(int m);
long long lcm_int(long long a, long long b);

}  // namespace wex

template <>
struct std::hash<wex::Cyclotomic> {
  std::size_t operator()(const wex::Cyclotomic& c) const { return c.hash(); }
};
