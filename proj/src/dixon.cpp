#include "wex/dixon.hpp"

#include <algorithm>
#include <cmath>

#include "wex/constructions.hpp"
#include "wex/error.hpp"

namespace wex {

namespace {

using i64 = long long;
using ModMat = std::vector<std::vector<i64>>;

i64 mulmod(i64 a, i64 b, i64 p) { return static_cast<i64>((static_cast<__int128>(a) * b) % p); }

i64 powmod(i64 a, i64 e, i64 p) {
  i64 r = 1;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

i64 primitive_root(i64 p) {
  std::vector<i64> factors;
  i64 n = p - 1;
  for (i64 q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      factors.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) factors.push_back(n);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 q : factors)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;
}

// Reduced row echelon form mod p in place; returns pivot columns.
std::vector<int> rref_mod(ModMat& m, i64 p) {
  std::vector<int> piv;
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return piv;
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int q = -1;
    for (int i = row; i < rows; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        q = i;
        break;
      }
    if (q < 0) continue;
    std::swap(m[static_cast<std::size_t>(q)], m[static_cast<std::size_t>(row)]);
    auto& pr = m[static_cast<std::size_t>(row)];
    const i64 inv = invmod(pr[static_cast<std::size_t>(col)], p);
    for (auto& x : pr) x = mulmod(x, inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == row) continue;
      auto& ri = m[static_cast<std::size_t>(i)];
      const i64 f = ri[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) {
        ri[static_cast<std::size_t>(j)] = (ri[static_cast<std::size_t>(j)] - mulmod(f, pr[static_cast<std::size_t>(j)], p)) % p;
        if (ri[static_cast<std::size_t>(j)] < 0) ri[static_cast<std::size_t>(j)] += p;
      }
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

std::vector<std::vector<i64>> nullspace_mod(ModMat m, i64 p, int cols) {
  const auto piv = rref_mod(m, p);
  std::vector<char> is_piv(static_cast<std::size_t>(cols), 0);
  for (int c : piv) is_piv[static_cast<std::size_t>(c)] = 1;
  std::vector<std::vector<i64>> out;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[static_cast<std::size_t>(f)]) continue;
    std::vector<i64> v(static_cast<std::size_t>(cols), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) {
      const i64 x = m[i][static_cast<std::size_t>(f)];
      if (x) v[static_cast<std::size_t>(piv[i])] = (p - x) % p;
    }
    out.push_back(std::move(v));
  }
  return out;
}

// A subspace of F_p^r stored as basis rows in reduced echelon form.
struct Space {
  std::vector<std::vector<i64>> rows;
  std::vector<int> pivots;
};

Space make_space(std::vector<std::vector<i64>> vecs, i64 p) {
  Space s;
  s.pivots = rref_mod(vecs, p);
  vecs.resize(s.pivots.size());
  s.rows = std::move(vecs);
  return s;
}

// Splits a space into eigenspaces of M (acting on column vectors).
std::vector<Space> split(const Space& s, const ModMat& mm, i64 p) {
  const std::size_t k = s.rows.size();
  const std::size_t r = s.rows[0].size();
  // Image of each basis vector, expressed in the basis through the pivot coordinates.
  ModMat a(k, std::vector<i64>(k, 0));  // a[col][row] : M b_col = sum_row a b_row
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<i64> img(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      i64 acc = 0;
      for (std::size_t j = 0; j < r; ++j)
        if (mm[i][j] && s.rows[c][j]) acc = (acc + mulmod(mm[i][j], s.rows[c][j], p)) % p;
      img[i] = acc;
    }
    for (std::size_t t = 0; t < k; ++t) a[c][t] = img[static_cast<std::size_t>(s.pivots[t])];
  }
  std::vector<Space> out;
  std::size_t total = 0;
  for (i64 lam = 0; lam < p && total < k; ++lam) {
    // (A^T - lam I) c = 0 with A^T[t][c] = a[c][t]
    ModMat sys(k, std::vector<i64>(k, 0));
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t c = 0; c < k; ++c) sys[t][c] = (a[c][t] - (t == c ? lam : 0) + p) % p;
    auto ker = nullspace_mod(sys, p, static_cast<int>(k));
    if (ker.empty()) continue;
    std::vector<std::vector<i64>> vecs;
    for (const auto& coef : ker) {
      std::vector<i64> v(r, 0);
      for (std::size_t c = 0; c < k; ++c)
        if (coef[c])
          for (std::size_t j = 0; j < r; ++j) v[j] = (v[j] + mulmod(coef[c], s.rows[c][j], p)) % p;
      vecs.push_back(std::move(v));
    }
    total += vecs.size();
    out.push_back(make_space(std::move(vecs), p));
  }
  if (total != k) throw internal_error("OrthogonalityFailure", "class matrix is not diagonalizable mod p");
  return out;
}

}  // namespace

long long dixon_prime(int exponent, std::size_t order) {
  for (i64 p = exponent + 1;; p += exponent) {
    if (static_cast<unsigned __int128>(p) * static_cast<unsigned __int128>(p) <= static_cast<unsigned __int128>(4) * order) continue;
    if (is_prime(p)) return p;
  }
}

CharacterTable dixon_table(const ClassAlgebra& alg) {
  const ClassStructure& cs = *alg.classes;
  const std::size_t r = cs.class_count();
  const i64 order = static_cast<i64>(cs.order);
  const i64 e = alg.exponent;
  const i64 p = dixon_prime(alg.exponent, cs.order);
  const i64 z = powmod(primitive_root(p), (p - 1) / e, p);

  std::vector<int> inv_class(r);
  for (std::size_t c = 0; c < r; ++c) inv_class[c] = cs.power(static_cast<int>(c), -1);

  std::vector<std::vector<i64>> full(r, std::vector<i64>(r, 0));
  for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
  std::vector<Space> spaces{make_space(full, p)};
  for (std::size_t i = 1; i < r; ++i) {
    bool need = false;
    for (const auto& s : spaces)
      if (s.rows.size() > 1) need = true;
    if (!need) break;
    auto raw = alg.structure_matrix(static_cast<int>(i));
    ModMat mm(r, std::vector<i64>(r, 0));
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) mm[j][k] = ((raw[j][k] % p) + p) % p;
    std::vector<Space> next;
    for (const auto& s : spaces) {
      if (s.rows.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(s, mm, p)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw internal_error("OrthogonalityFailure", "eigenspace splitting did not separate the characters");

  CharacterTable t;
  t.classes = alg.classes;
  const i64 bound = static_cast<i64>(std::floor(std::sqrt(static_cast<double>(order)))) + 1;
  for (const auto& s : spaces) {
    std::vector<i64> w = s.rows[0];
    if (w[0] == 0) throw internal_error("OrthogonalityFailure", "central character vanishes at the identity");
    const i64 n0 = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, n0, p);
    i64 sum = 0;
    for (std::size_t k = 0; k < r; ++k)
      sum = (sum + mulmod(mulmod(w[k], w[static_cast<std::size_t>(inv_class[k])], p), invmod(cs.sizes[k] % p, p), p)) % p;
    const i64 deg2 = mulmod(order % p, invmod(sum, p), p);
    i64 deg = -1;
    for (i64 f = 1; f <= bound && f < p; ++f)
      if (mulmod(f, f, p) == deg2) {
        deg = f;
        break;
      }
    if (deg < 0) throw internal_error("OrthogonalityFailure", "no integral degree matches the central character");
    std::vector<i64> chi_p(r);
    for (std::size_t k = 0; k < r; ++k) chi_p[k] = mulmod(mulmod(w[k], deg, p), invmod(cs.sizes[k] % p, p), p);

    ClassFunction chi{alg.classes, {}};
    const i64 inv_e = invmod(e % p, p);
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<Rational> coeffs(static_cast<std::size_t>(e));
      std::vector<i64> pw(static_cast<std::size_t>(e));
      for (i64 j = 0; j < e; ++j) pw[static_cast<std::size_t>(j)] = chi_p[static_cast<std::size_t>(cs.power(static_cast<int>(k), j))];
      for (i64 tt = 0; tt < e; ++tt) {
        i64 acc = 0;
        for (i64 j = 0; j < e; ++j) acc = (acc + mulmod(pw[static_cast<std::size_t>(j)], powmod(z, (e - (j * tt) % e) % e, p), p)) % p;
        const i64 m = mulmod(acc, inv_e, p);
        if (m > deg) throw internal_error("OrthogonalityFailure", "eigenvalue multiplicity out of range");
        coeffs[static_cast<std::size_t>(tt)] = Rational(m);
      }
      chi.values.push_back(cyclo_embed(Cyclotomic::from_powers(static_cast<int>(e), coeffs), cs.conductor));
    }
    t.irreducibles.push_back(std::move(chi));
  }
  std::stable_sort(t.irreducibles.begin(), t.irreducibles.end(), [](const ClassFunction& a, const ClassFunction& b) {
    auto is_trivial = [](const ClassFunction& f) {
      for (const auto& v : f.values)
        if (!v.is_one()) return false;
      return true;
    };
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    return a.degree() < b.degree();
  });
  for (const auto& chi : t.irreducibles) t.linear.push_back(chi.degree() == 1);
  validate_orthogonality(t);
  return t;
}

CharacterTable dixon_table(const FiniteMatrixGroup& g, const ClassStructurePtr& cs) {
  ClassAlgebra alg;
  alg.classes = cs;
  alg.exponent = g.exponent();
  alg.structure_matrix = [&g, cs](int i) {
    const std::size_t r = cs->class_count();
    std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
    const int inv = cs->power(i, -1);
    // x^-1 ranges over the inverse class as x ranges over C_i.
    for (std::size_t k = 0; k < r; ++k) {
      const int zk = g.classes()[k].representative;
      for (int u : g.classes()[static_cast<std::size_t>(inv)].members) ++m[static_cast<std::size_t>(g.class_of(g.multiply(u, zk)))][k];
    }
    return m;
  };
  return dixon_table(alg);
}

void validate_orthogonality(const CharacterTable& t) {
  const auto& cs = *t.classes;
  const std::size_t r = cs.class_count();
  if (t.irreducibles.size() != r)
    throw internal_error("OrthogonalityFailure", "number of irreducibles differs from number of classes");
  long long sq = 0;
  for (const auto& chi : t.irreducibles) sq += chi.degree() * chi.degree();
  if (sq != static_cast<long long>(cs.order)) throw internal_error("OrthogonalityFailure", "sum of squared degrees differs from the order");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      const Rational ip = char_inner(t.irreducibles[i], t.irreducibles[j]);
      if (ip != Rational(i == j ? 1 : 0))
        throw internal_error("OrthogonalityFailure", "row orthogonality fails for " + std::to_string(i) + "," + std::to_string(j));
    }
  std::vector<Vector> conj(r);
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& v : t.irreducibles[i].values) conj[i].push_back(v.conj());
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      Cyclotomic s;
      for (std::size_t i = 0; i < r; ++i) {
        const auto& x = t.irreducibles[i].values[a];
        const auto& y = conj[i][b];
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
      const Cyclotomic want = a == b ? Cyclotomic(Rational(static_cast<long long>(cs.order) / cs.sizes[a])) : Cyclotomic(0);
      if (!(s == want))
        throw internal_error("OrthogonalityFailure", "column orthogonality fails for " + std::to_string(a) + "," + std::to_string(b));
    }
}

}  // namespace wex
