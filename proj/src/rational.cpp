#include "wex/rational.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>

#include "wex/error.hpp"

namespace wex {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

std::uint64_t uabs(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n) : num_(n), den_(1) {
  if (n == std::numeric_limits<std::int64_t>::min()) assign_mpq(mpq_class(mpz_class(std::to_string(n))));
}

Rational::Rational(long long n, long long d) {
  if (d == 0) throw domain_error("DivisionByZero", "zero denominator");
  constexpr auto lo = std::numeric_limits<std::int64_t>::min();
  if (n != lo && d != lo) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const auto g = static_cast<std::int64_t>(std::gcd(uabs(n), static_cast<std::uint64_t>(d)));
    num_ = n / g;
    den_ = d / g;
    return;
  }
  assign_mpq(mpq_class(mpz_class(std::to_string(n)), mpz_class(std::to_string(d))));
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational::Rational(const mpz_class& z) { assign_mpq(mpq_class(z)); }

void Rational::assign_mpq(const mpq_class& q_in) {
  mpq_class q = q_in;
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  const auto small = [](const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) && mpz_get_si(z.get_mpz_t()) != std::numeric_limits<long>::min();
  };
  if (small(n) && small(d)) {
    num_ = mpz_get_si(n.get_mpz_t());
    den_ = mpz_get_si(d.get_mpz_t());
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(q);
  }
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::Parse, "ParseError", "empty rational");
  auto valid_int = [](std::string_view t) {
    std::size_t i = 0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorKind::Parse, "ParseError", "bad integer '" + s + "'");
    return Rational(mpz_class(strip_plus(s)));
  }
  std::string a = s.substr(0, slash), b = s.substr(slash + 1);
  if (!valid_int(a) || !valid_int(b)) throw Error(ErrorKind::Parse, "ParseError", "bad rational '" + s + "'");
  mpz_class den(strip_plus(b));
  if (den == 0) throw domain_error("DivisionByZero", "zero denominator in '" + s + "'");
  return Rational(mpq_class(mpz_class(strip_plus(a)), den));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(std::to_string(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(std::to_string(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(std::to_string(num_)), mpz_class(std::to_string(den_)));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  std::size_t h = std::hash<std::int64_t>{}(num_);
  h ^= std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.assign_mpq(-*big_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw domain_error("DivisionByZero", "inverse of zero");
  Rational r;
  if (big_) {
    r.assign_mpq(1 / *big_);
  } else if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      const i128 n = static_cast<i128>(num_) + o.num_;
      if (fits(n)) {
        num_ = static_cast<std::int64_t>(n);
        return *this;
      }
      assign_mpq(mpq_class(to_mpz(n)));
      return *this;
    }
    // Knuth's gcd-reduced addition.
    const std::int64_t d1 = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(o.den_)));
    i128 n;
    i128 d;
    if (d1 == 1) {
      n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
      d = static_cast<i128>(den_) * o.den_;
    } else {
      const i128 t = static_cast<i128>(num_) * (o.den_ / d1) + static_cast<i128>(o.num_) * (den_ / d1);
      const i128 tm = t % d1;
      const std::uint64_t d2 = std::gcd(static_cast<std::uint64_t>(tm < 0 ? -tm : tm), static_cast<std::uint64_t>(d1));
      n = t / static_cast<i128>(d2);
      d = static_cast<i128>(den_ / d1) * (o.den_ / static_cast<std::int64_t>(d2));
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    assign_mpq(mpq_class(to_mpz(n), to_mpz(d)));
    return *this;
  }
  assign_mpq(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Rational();
  if (!big_ && !o.big_) {
    const std::int64_t g1 = static_cast<std::int64_t>(std::gcd(uabs(num_), static_cast<std::uint64_t>(o.den_)));
    const std::int64_t g2 = static_cast<std::int64_t>(std::gcd(uabs(o.num_), static_cast<std::uint64_t>(den_)));
    const i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    const i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    assign_mpq(mpq_class(to_mpz(n), to_mpz(d)));
    return *this;
  }
  assign_mpq(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in size class
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace wex
