#include "wex/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "wex/error.hpp"

namespace wex {

namespace detail {

struct CycloField {
  int m = 1;
  int phi = 1;
  std::vector<std::int64_t> poly;              // Phi_m, constant term first, monic
  std::vector<std::vector<std::int64_t>> red;  // red[k] = x^k mod Phi_m, k < max(m, 2 phi - 1)
};

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::unique_ptr<CycloField> build_field(int m) {
  auto f = std::make_unique<CycloField>();
  f->m = m;
  f->poly = cyclotomic_polynomial(m);
  f->phi = static_cast<int>(f->poly.size()) - 1;
  const int phi = f->phi;
  const int count = std::max(m, 2 * phi - 1);
  f->red.assign(static_cast<std::size_t>(count), std::vector<std::int64_t>(static_cast<std::size_t>(phi), 0));
  for (int k = 0; k < std::min(phi, count); ++k) f->red[k][k] = 1;
  for (int k = phi; k < count; ++k) {
    // x * red[k-1], then fold the x^phi term back with the monic relation.
    const auto& prev = f->red[k - 1];
    auto& cur = f->red[k];
    const std::int64_t top = prev[phi - 1];
    for (int i = phi - 1; i >= 1; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < phi; ++i) cur[i] -= top * f->poly[i];
  }
  return f;
}

}  // namespace

const CycloField* field(int m) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycloField>> registry;
  if (m < 1) throw domain_error("BadConductor", "conductor must be positive, got " + std::to_string(m));
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(m);
  if (it == registry.end()) it = registry.emplace(m, build_field(m)).first;
  return it->second.get();
}

}  // namespace detail

using detail::CycloField;

int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

long long lcm_int(long long a, long long b) { return a / std::gcd(a, b) * b; }

std::vector<std::int64_t> cyclotomic_polynomial(int m) {
  if (m < 1) throw domain_error("BadConductor", "conductor must be positive");
  // Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}: multiply the numerator
  // factors, then divide exactly by each denominator factor.
  std::vector<__int128> num{1};
  std::vector<int> denominators;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    const int mu = detail::mobius(m / d);
    if (mu == 1) {
      std::vector<__int128> next(num.size() + static_cast<std::size_t>(d), 0);
      for (std::size_t i = 0; i < num.size(); ++i) {
        next[i + static_cast<std::size_t>(d)] += num[i];
        next[i] -= num[i];
      }
      num = std::move(next);
    } else if (mu == -1) {
      denominators.push_back(d);
    }
  }
  for (int d : denominators) {
    // Exact division by x^d - 1, from the top: q_i = r_{i+d}, r_i += q_i.
    const std::size_t n = num.size() - 1;
    std::vector<__int128> q(n - static_cast<std::size_t>(d) + 1, 0);
    std::vector<__int128> r = num;
    for (std::size_t i = n + 1; i-- > static_cast<std::size_t>(d);) {
      const __int128 c = r[i];
      q[i - static_cast<std::size_t>(d)] = c;
      r[i] = 0;
      r[i - static_cast<std::size_t>(d)] += c;
    }
    num = std::move(q);
  }
  std::vector<std::int64_t> out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) out[i] = static_cast<std::int64_t>(num[i]);
  return out;
}

namespace {

std::vector<Rational> zeros(int n) { return std::vector<Rational>(static_cast<std::size_t>(n)); }

void axpy(std::vector<Rational>& acc, const Rational& c, const std::vector<std::int64_t>& v) {
  for (std::size_t t = 0; t < v.size(); ++t)
    if (v[t] != 0) acc[t] += c * Rational(v[t]);
}

// Polynomial helpers over Q for the extended Euclid inverse.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational());
  const Rational lead_inv = b.back().inverse();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
}

Poly poly_sub_mul(const Poly& a, const Poly& q, const Poly& b) {
  Poly out(std::max(a.size(), q.size() + b.size()), Rational());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

Cyclotomic::Cyclotomic() : field_(detail::field(1)), coeffs_(1) {}

Cyclotomic::Cyclotomic(const Rational& r) : field_(detail::field(1)), coeffs_{r} {}

Cyclotomic Cyclotomic::zero(int m) {
  Cyclotomic c;
  c.field_ = detail::field(m);
  c.coeffs_ = zeros(c.field_->phi);
  return c;
}

Cyclotomic Cyclotomic::from_rational(const Rational& r, int m) {
  Cyclotomic c = zero(m);
  c.coeffs_[0] = r;
  return c;
}

Cyclotomic Cyclotomic::from_powers(int m, std::span<const Rational> powers) {
  Cyclotomic c = zero(m);
  const CycloField* f = c.field_;
  for (std::size_t k = 0; k < powers.size(); ++k) {
    if (powers[k].is_zero()) continue;
    const int e = static_cast<int>(k % static_cast<std::size_t>(m));
    if (e < f->phi)
      c.coeffs_[e] += powers[k];
    else
      axpy(c.coeffs_, powers[k], f->red[e]);
  }
  return c;
}

int Cyclotomic::conductor() const noexcept { return field_->m; }
int Cyclotomic::degree() const noexcept { return field_->phi; }

bool Cyclotomic::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool Cyclotomic::is_one() const noexcept { return is_rational() && coeffs_[0].is_one(); }

bool Cyclotomic::is_rational() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw domain_error("NotRational", "value " + to_literal() + " is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic c = *this;
  for (auto& r : c.coeffs_) r = -r;
  return c;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  Cyclotomic c = *this;
  if (r.is_one()) return c;
  for (auto& x : c.coeffs_)
    if (!x.is_zero()) x *= r;
  return c;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (field_ == o.field_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  if (o.field_->m == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  const int m = static_cast<int>(lcm_int(conductor(), o.conductor()));
  *this = cyclo_embed(*this, m);
  return *this += cyclo_embed(o, m);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    if (b.field_->m == 1) return a.scaled(b.coeffs_[0]);
    if (a.field_->m == 1) return b.scaled(a.coeffs_[0]);
    const int m = static_cast<int>(lcm_int(a.conductor(), b.conductor()));
    return cyclo_embed(a, m) * cyclo_embed(b, m);
  }
  const CycloField* f = a.field_;
  const int phi = f->phi;
  Cyclotomic out = Cyclotomic::zero(f->m);
  if (phi == 1) {
    out.coeffs_[0] = a.coeffs_[0] * b.coeffs_[0];
    return out;
  }
  std::vector<Rational> prod = zeros(2 * phi - 1);
  bool any = false;
  for (int i = 0; i < phi; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
      any = true;
    }
  }
  if (!any) return out;
  for (int k = 0; k < phi; ++k) out.coeffs_[k] = std::move(prod[k]);
  for (int k = phi; k < 2 * phi - 1; ++k)
    if (!prod[k].is_zero()) axpy(out.coeffs_, prod[k], f->red[k]);
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw domain_error("DivisionByZero", "inverse of zero");
  const CycloField* f = field_;
  if (is_rational()) return from_rational(coeffs_[0].inverse(), f->m);
  Poly modulus(f->poly.begin(), f->poly.end());
  Poly r0 = modulus, r1 = coeffs_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_m is irreducible.
  if (r0.size() != 1) throw internal_error("InternalInconsistency", "cyclotomic gcd is not constant");
  const Rational scale = r0[0].inverse();
  for (auto& c : s0) c *= scale;
  return from_powers(f->m, s0);
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this = *this * o.inverse(); }

Cyclotomic Cyclotomic::conj() const { return cyclo_galois(*this, -1); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  const int m = static_cast<int>(lcm_int(a.conductor(), b.conductor()));
  return cyclo_embed(a, m).coeffs_ == cyclo_embed(b, m).coeffs_;
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = std::hash<int>{}(field_->m);
  for (const auto& c : coeffs_) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Cyclotomic root_of_unity(int m, long long j) {
  if (m < 1) throw domain_error("BadConductor", "conductor must be positive");
  Cyclotomic c = Cyclotomic::zero(m);
  const int e = static_cast<int>(((j % m) + m) % m);
  const CycloField* f = c.field_;
  if (e < f->phi)
    c.coeffs_[e] = Rational(1);
  else
    axpy(c.coeffs_, Rational(1), f->red[e]);
  return c;
}

std::optional<Cyclotomic> root_of_unity_in(int m, int k, long long j) {
  long long a = ((j % k) + k) % k;
  long long b = k;
  const long long g = std::gcd(a, b);
  a /= g;
  b /= g;
  if (m % b == 0) return root_of_unity(m, a * (m / b));
  if (m % 2 == 1 && (2LL * m) % b == 0) {
    // zeta_{2m} = -zeta_m^{(m+1)/2}
    const long long t = a * (2LL * m / b);
    Cyclotomic v = root_of_unity(m, t * ((m + 1) / 2));
    return (t % 2 == 0) ? v : -v;
  }
  return std::nullopt;
}

Cyclotomic cyclo_arith(const Cyclotomic& a, const Cyclotomic& b, CycloOp op) {
  switch (op) {
    case CycloOp::Add: return a + b;
    case CycloOp::Sub: return a - b;
    case CycloOp::Mul: return a * b;
    case CycloOp::Div:
      if (b.is_zero()) throw domain_error("DivisionByZero", "division by zero cyclotomic");
      return a / b;
  }
  return a;
}

Cyclotomic cyclo_galois(const Cyclotomic& a, long long k) {
  const int m = a.conductor();
  const long long kk = ((k % m) + m) % m;
  if (std::gcd(kk, static_cast<long long>(m)) != 1)
    throw domain_error("NotCoprime", "galois exponent " + std::to_string(k) + " not coprime to " + std::to_string(m));
  if (m == 1 || kk == 1) return a;
  Cyclotomic out = Cyclotomic::zero(m);
  const CycloField* f = a.field_;
  for (int i = 0; i < f->phi; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    const int e = static_cast<int>((static_cast<long long>(i) * kk) % m);
    if (e < f->phi)
      out.coeffs_[e] += a.coeffs_[i];
    else
      axpy(out.coeffs_, a.coeffs_[i], f->red[e]);
  }
  return out;
}

Cyclotomic cyclo_embed(const Cyclotomic& a, int m2) {
  const int m = a.conductor();
  if (m2 < 1 || m2 % m != 0)
    throw domain_error("NotAMultiple", std::to_string(m2) + " is not a multiple of conductor " + std::to_string(m));
  if (m2 == m) return a;
  const int q = m2 / m;
  Cyclotomic out = Cyclotomic::zero(m2);
  const CycloField* f2 = out.field_;
  for (int i = 0; i < a.field_->phi; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    const int e = i * q;
    if (e < f2->phi)
      out.coeffs_[e] += a.coeffs_[i];
    else
      axpy(out.coeffs_, a.coeffs_[i], f2->red[e]);
  }
  return out;
}

std::optional<Cyclotomic> rewrite_at_conductor(const Cyclotomic& a, int m) {
  const int c = a.conductor();
  if (c == m) return a;
  if (m % c == 0) return cyclo_embed(a, m);
  if (a.is_rational()) return Cyclotomic::from_rational(a.coefficients()[0], m);
  Cyclotomic out = Cyclotomic::zero(m);
  for (int i = 0; i < a.degree(); ++i) {
    const Rational& k = a.coefficients()[static_cast<std::size_t>(i)];
    if (k.is_zero()) continue;
    auto z = root_of_unity_in(m, c, i);
    if (!z) return std::nullopt;
    out += z->scaled(k);
  }
  return out;
}

std::string Cyclotomic::to_literal() const { return to_literal(conductor()); }

std::string Cyclotomic::to_literal(int m) const {
  const Cyclotomic v = cyclo_embed(*this, m);
  std::string out;
  for (int i = 0; i < v.field_->phi; ++i) {
    const Rational& c = v.coeffs_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    std::string term;
    if (i == 0)
      term = mag.str();
    else if (mag.is_one())
      term = "z^" + std::to_string(i);
    else
      term = mag.str() + "*z^" + std::to_string(i);
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view s, int m) : s_(s), m_(m), powers_(static_cast<std::size_t>(m)) {}

  Cyclotomic run() {
    skip();
    if (pos_ >= s_.size()) fail("empty literal");
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    term(sign);
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      term(c == '-' ? -1 : 1);
    }
    return Cyclotomic::from_powers(m_, powers_);
  }

 private:
  char peek() const { return s_[pos_]; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, "ParseError",
                "cyclotomic literal '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string integer(bool allow_sign) {
    skip();
    std::string out;
    if (allow_sign && pos_ < s_.size() && (peek() == '-' || peek() == '+')) {
      if (peek() == '-') out += '-';
      ++pos_;
      skip();
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) out += s_[pos_++];
    if (pos_ == start) fail("expected integer");
    return out;
  }

  long long zpower() {
    // at 'z'
    ++pos_;
    skip();
    if (pos_ < s_.size() && peek() == '^') {
      ++pos_;
      const std::string e = integer(true);
      if (e.size() > 18) fail("exponent too large");
      return std::stoll(e);
    }
    return 1;
  }

  void term(int sign) {
    skip();
    if (pos_ >= s_.size()) fail("expected term");
    Rational coeff(sign);
    long long exponent = 0;
    if (peek() == 'z') {
      exponent = zpower();
    } else {
      std::string num = integer(false);
      skip();
      std::string text = num;
      if (pos_ < s_.size() && peek() == '/') {
        ++pos_;
        text += "/" + integer(false);
      }
      Rational r;
      try {
        r = Rational::parse(text);
      } catch (const Error& e) {
        fail(e.what());
      }
      coeff *= r;
      skip();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        skip();
        if (pos_ >= s_.size() || peek() != 'z') fail("expected 'z' after '*'");
        exponent = zpower();
      }
    }
    const long long e = ((exponent % m_) + m_) % m_;
    powers_[static_cast<std::size_t>(e)] += coeff;
  }

  std::string_view s_;
  int m_;
  std::size_t pos_ = 0;
  std::vector<Rational> powers_;
};

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text, int m) {
  if (m < 1) throw domain_error("BadConductor", "conductor must be positive");
  return LiteralParser(text, m).run();
}

}  // namespace wex
