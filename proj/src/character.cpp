#include "wex/character.hpp"

#include <map>

#include "wex/error.hpp"

namespace wex {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int ClassStructure::power(int c, long long k) const {
  const long long r = element_orders[static_cast<std::size_t>(c)];
  long long e = k % r;
  if (e < 0) e += r;
  if (e == 0) return 0;
  if (e == 1) return c;
  if (static_cast<std::size_t>(e) >= power_maps.size() || power_maps[static_cast<std::size_t>(e)].empty())
    throw Error(ErrorKind::Validation, "MissingPowerMap", "power map " + std::to_string(e) + " is not available");
  return power_maps[static_cast<std::size_t>(e)][static_cast<std::size_t>(c)];
}

bool ClassStructure::same_as(const ClassStructure& o) const {
  return order == o.order && sizes == o.sizes && element_orders == o.element_orders;
}

ClassStructurePtr class_structure(const FiniteMatrixGroup& g) {
  auto cs = std::make_shared<ClassStructure>();
  cs->order = g.order();
  cs->conductor = static_cast<int>(lcm_int(g.exponent(), g.conductor()));
  const std::size_t r = g.classes().size();
  const int e = g.exponent();
  cs->power_maps.assign(static_cast<std::size_t>(e), std::vector<int>(r, 0));
  for (std::size_t c = 0; c < r; ++c) {
    const auto& cl = g.classes()[c];
    cs->sizes.push_back(cl.size);
    cs->element_orders.push_back(cl.element_order);
    std::vector<int> pw;  // class of rep^j for j < order
    Matrix cur = Matrix::identity(g.degree());
    const Matrix& rep = g.element(cl.representative);
    for (int j = 0; j < cl.element_order; ++j) {
      pw.push_back(g.class_of(*g.index_of(cur)));
      cur = cur * rep;
    }
    for (int k = 0; k < e; ++k) cs->power_maps[static_cast<std::size_t>(k)][c] = pw[static_cast<std::size_t>(k % cl.element_order)];
  }
  return cs;
}

long long ClassFunction::degree() const {
  const Rational r = values.at(0).to_rational();
  if (!r.is_integer() || !r.fits_small()) throw internal_error("InternalInconsistency", "character degree is not an integer");
  return r.small_num();
}

ClassFunction natural_character(const FiniteMatrixGroup& g, const ClassStructurePtr& cs) {
  ClassFunction chi{cs, {}};
  for (const auto& c : g.classes()) chi.values.push_back(cyclo_embed(g.element(c.representative).trace(), cs->conductor));
  return chi;
}

ClassFunction trivial_character(const ClassStructurePtr& cs) {
  return ClassFunction{cs, Vector(cs->class_count(), Cyclotomic::from_rational(1, cs->conductor))};
}

namespace {

void require_same(const ClassFunction& a, const ClassFunction& b) {
  if (a.classes != b.classes && !(a.classes && b.classes && a.classes->same_as(*b.classes)))
    throw domain_error("GroupMismatch", "class functions live on different groups");
  if (a.values.size() != b.values.size()) throw domain_error("GroupMismatch", "class functions have different lengths");
}

}  // namespace

Rational char_inner(const ClassFunction& chi, const ClassFunction& psi) {
  require_same(chi, psi);
  Cyclotomic s;
  for (std::size_t c = 0; c < chi.values.size(); ++c) {
    if (chi.values[c].is_zero() || psi.values[c].is_zero()) continue;
    s += (chi.values[c] * psi.values[c].conj()).scaled(Rational(chi.classes->sizes[c]));
  }
  return s.to_rational() / Rational(static_cast<long long>(chi.classes->order));
}

ClassFunction dual_character(const ClassFunction& chi) {
  ClassFunction out{chi.classes, {}};
  for (const auto& v : chi.values) out.values.push_back(v.conj());
  return out;
}

ClassFunction sym_power_character(const ClassFunction& chi, int d) {
  const auto& cs = *chi.classes;
  ClassFunction out{chi.classes, {}};
  for (std::size_t c = 0; c < chi.values.size(); ++c) {
    std::vector<Cyclotomic> s{Cyclotomic(1)};
    std::vector<Cyclotomic> pw;  // chi(g^k), k = 1..d
    for (int k = 1; k <= d; ++k) pw.push_back(chi[cs.power(static_cast<int>(c), k)]);
    for (int m = 1; m <= d; ++m) {
      Cyclotomic acc;
      for (int k = 1; k <= m; ++k) acc += pw[static_cast<std::size_t>(k - 1)] * s[static_cast<std::size_t>(m - k)];
      s.push_back(acc.scaled(Rational(1, m)));
    }
    out.values.push_back(s.back());
  }
  return out;
}

std::vector<std::vector<int>> monomials(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  // Recursive fill, largest x_0 exponent first.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      cur[static_cast<std::size_t>(i)] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[static_cast<std::size_t>(i)] = a;
      self(self, i + 1, left - a);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

Matrix sym_power_matrix(const Matrix& g, int d) {
  const int n = g.rows();
  auto inv = inverse(g);
  if (!inv) throw domain_error("NotInvertible", "symmetric power of a singular matrix");
  const Matrix& h = *inv;
  // images[deg][monomial index] = coefficient vector of the image of x^alpha.
  std::vector<std::vector<std::vector<int>>> mons;
  std::vector<std::map<std::vector<int>, int>> index;
  for (int k = 0; k <= d; ++k) {
    mons.push_back(monomials(n, k));
    std::map<std::vector<int>, int> idx;
    for (std::size_t i = 0; i < mons.back().size(); ++i) idx[mons.back()[i]] = static_cast<int>(i);
    index.push_back(std::move(idx));
  }
  std::vector<std::vector<Vector>> images(static_cast<std::size_t>(d + 1));
  images[0] = {Vector{Cyclotomic(1)}};
  for (int k = 1; k <= d; ++k) {
    const auto& ms = mons[static_cast<std::size_t>(k)];
    for (const auto& alpha : ms) {
      int i = 0;
      while (alpha[static_cast<std::size_t>(i)] == 0) ++i;
      std::vector<int> beta = alpha;
      --beta[static_cast<std::size_t>(i)];
      const Vector& prev = images[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(index[static_cast<std::size_t>(k - 1)].at(beta))];
      Vector img(ms.size());
      const auto& prev_mons = mons[static_cast<std::size_t>(k - 1)];
      for (std::size_t b = 0; b < prev.size(); ++b) {
        if (prev[b].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          const Cyclotomic& hij = h(i, j);
          if (hij.is_zero()) continue;
          std::vector<int> gam = prev_mons[b];
          ++gam[static_cast<std::size_t>(j)];
          img[static_cast<std::size_t>(index[static_cast<std::size_t>(k)].at(gam))] += prev[b] * hij;
        }
      }
      images[static_cast<std::size_t>(k)].push_back(std::move(img));
    }
  }
  const auto& cols = images[static_cast<std::size_t>(d)];
  return from_columns(cols, static_cast<int>(cols.size()));
}

std::vector<ClassFunction> linear_characters(const FiniteMatrixGroup& g, const FiniteMatrixGroup& derived,
                                             const ClassStructurePtr& cs) {
  const std::size_t n = g.order();
  const long long e = g.exponent();
  std::vector<int> coset(n, -1);
  std::vector<int> rep;
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(rep.size());
    rep.push_back(static_cast<int>(x));
    for (const auto& hm : derived.elements()) coset[static_cast<std::size_t>(*g.index_of(g.element(static_cast<int>(x)) * hm))] = id;
  }
  auto mult = [&](int a, int b) { return coset[static_cast<std::size_t>(g.multiply(rep[static_cast<std::size_t>(a)], rep[static_cast<std::size_t>(b)]))]; };

  // Characters of the growing subgroup A of G/G', as exponents mod e on each coset in A.
  std::vector<int> members{0};
  std::vector<char> in_a(rep.size(), 0);
  in_a[0] = 1;
  std::vector<std::map<int, long long>> chars{{{0, 0}}};
  for (const auto& gen : g.generators()) {
    const int cg = coset[static_cast<std::size_t>(*g.index_of(gen))];
    if (in_a[static_cast<std::size_t>(cg)]) continue;
    std::vector<int> pw{0, cg};
    while (!in_a[static_cast<std::size_t>(pw.back())]) pw.push_back(mult(pw.back(), cg));
    const long long r = static_cast<long long>(pw.size()) - 1;
    const int target = pw.back();
    std::vector<int> next_members;
    for (long long j = 0; j < r; ++j)
      for (int a : members) next_members.push_back(mult(a, pw[static_cast<std::size_t>(j)]));
    std::vector<std::map<int, long long>> next;
    for (const auto& lam : chars) {
      const long long t = lam.at(target);
      // r * s = t (mod e); r divides e.
      if (t % r != 0) throw internal_error("InternalInconsistency", "linear character extension has no root");
      for (long long q = 0; q < r; ++q) {
        const long long s = (t / r + q * (e / r)) % e;
        std::map<int, long long> ext;
        for (long long j = 0; j < r; ++j)
          for (int a : members) ext[mult(a, pw[static_cast<std::size_t>(j)])] = (lam.at(a) + j * s) % e;
        next.push_back(std::move(ext));
      }
    }
    members = std::move(next_members);
    for (int a : members) in_a[static_cast<std::size_t>(a)] = 1;
    chars = std::move(next);
  }
  if (members.size() != rep.size()) throw internal_error("InternalInconsistency", "generators do not cover G/[G,G]");
  std::vector<ClassFunction> out;
  for (const auto& lam : chars) {
    ClassFunction f{cs, {}};
    for (const auto& c : g.classes())
      f.values.push_back(cyclo_embed(root_of_unity(static_cast<int>(e), lam.at(coset[static_cast<std::size_t>(c.representative)])), cs->conductor));
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

long long to_count(const Rational& r, const char* what) {
  if (!r.is_integer() || r.sign() < 0 || !r.fits_small())
    throw internal_error("InternalInconsistency", std::string(what) + " is not a non-negative integer: " + r.str());
  return r.small_num();
}

}  // namespace

long long semiinvariant_count_group(const FiniteMatrixGroup& g, const FiniteMatrixGroup& derived,
                                    const ClassFunction& natural, int d) {
  const ClassFunction s = sym_power_character(dual_character(natural), d);
  std::vector<long long> hits(g.classes().size(), 0);
  for (const auto& h : derived.elements()) ++hits[static_cast<std::size_t>(g.class_of(*g.index_of(h)))];
  Cyclotomic acc;
  for (std::size_t c = 0; c < hits.size(); ++c)
    if (hits[c]) acc += s.values[c].scaled(Rational(hits[c]));
  return to_count(acc.to_rational() / Rational(static_cast<long long>(derived.order())), "semi-invariant count");
}

long long semiinvariant_count_linear(const ClassFunction& natural, const std::vector<ClassFunction>& linear, int d) {
  const ClassFunction s = sym_power_character(dual_character(natural), d);
  long long total = 0;
  for (const auto& lam : linear) total += to_count(char_inner(s, lam), "linear multiplicity");
  return total;
}

long long semiinvariant_count(const CharacterTable& t, int d) {
  if (t.linear.size() != t.irreducibles.size())
    throw Error(ErrorKind::Validation, "MissingLinearFlags", "table has no linear flags");
  if (!t.natural) throw Error(ErrorKind::Validation, "MissingNatural", "table has no natural character");
  std::vector<ClassFunction> lin;
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i)
    if (t.linear[i]) lin.push_back(t.irreducibles[i]);
  return semiinvariant_count_linear(*t.natural, lin, d);
}

std::vector<std::pair<int, Cyclotomic>> scalar_classes(const ClassFunction& natural) {
  std::vector<std::pair<int, Cyclotomic>> out;
  const Cyclotomic dim = natural[0];
  const Cyclotomic dim2 = dim * dim;
  for (std::size_t c = 0; c < natural.size(); ++c) {
    if (natural.classes->sizes[c] != 1) continue;
    if (natural.values[c] * natural.values[c].conj() == dim2) out.emplace_back(static_cast<int>(c), natural.values[c] / dim);
  }
  return out;
}

bool central_obstruction(const ClassFunction& natural, const std::vector<ClassFunction>& linear, int d) {
  for (const auto& [c, z] : scalar_classes(natural)) {
    Cyclotomic want(1);
    const Cyclotomic zc = z.conj();
    for (int i = 0; i < d; ++i) want *= zc;
    bool found = false;
    for (const auto& lam : linear)
      if (lam[c] == want) {
        found = true;
        break;
      }
    if (!found) return true;
  }
  return false;
}

std::vector<std::pair<int, long long>> constituent_multiplicities(const ClassFunction& chi, const CharacterTable& t) {
  std::vector<std::pair<int, long long>> out;
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    const Rational m = char_inner(chi, t.irreducibles[i]);
    if (!m.is_integer() || m.sign() < 0)
      throw internal_error("NonIntegralMultiplicity", "multiplicity " + m.str() + " of constituent " + std::to_string(i));
    if (!m.is_zero()) out.emplace_back(static_cast<int>(i), m.small_num());
  }
  return out;
}

bool subrep_dimension_reachable(const std::vector<std::pair<long long, long long>>& dims_mults, long long t) {
  if (t < 0) return false;
  std::vector<char> reach(static_cast<std::size_t>(t + 1), 0);
  reach[0] = 1;
  for (const auto& [dim, mult] : dims_mults) {
    if (dim <= 0) continue;
    for (long long copy = 0; copy < mult; ++copy) {
      bool changed = false;
      for (long long s = t; s >= dim; --s)
        if (!reach[static_cast<std::size_t>(s)] && reach[static_cast<std::size_t>(s - dim)]) {
          reach[static_cast<std::size_t>(s)] = 1;
          changed = true;
        }
      if (!changed) break;
    }
  }
  return reach[static_cast<std::size_t>(t)] != 0;
}

Matrix isotypic_projector(const FiniteMatrixGroup& g, const CharacterTable& t, int d, int irrep) {
  const ClassFunction& chi = t.irreducibles.at(static_cast<std::size_t>(irrep));
  const int dim = static_cast<int>(binomial(g.degree() + d - 1, d));
  Matrix p(dim, dim);
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    if (chi.values[c].is_zero()) continue;
    Matrix sum(dim, dim);
    for (int x : g.classes()[c].members) sum = sum + sym_power_matrix(g.element(x), d);
    p = p + sum.scaled(chi.values[c].conj());
  }
  return p.scaled(Cyclotomic(Rational(chi.degree(), static_cast<long long>(g.order()))));
}

std::vector<Vector> isotypic_basis(const FiniteMatrixGroup& g, const CharacterTable& t, int d, int irrep) {
  const Matrix p = isotypic_projector(g, t, d, irrep);
  std::vector<Vector> cols;
  for (int j = 0; j < p.cols(); ++j) {
    Vector v(static_cast<std::size_t>(p.rows()));
    for (int i = 0; i < p.rows(); ++i) v[static_cast<std::size_t>(i)] = p(i, j);
    cols.push_back(std::move(v));
  }
  return row_space_basis(cols, p.rows());
}

std::vector<Vector> fixed_subspace(const FiniteMatrixGroup& sub, int d) {
  const int dim = static_cast<int>(binomial(sub.degree() + d - 1, d));
  std::vector<Matrix> blocks;
  for (const auto& gen : sub.generators()) blocks.push_back(sym_power_matrix(gen, d) - Matrix::identity(dim));
  Matrix stacked(static_cast<int>(blocks.size()) * dim, dim);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) stacked(static_cast<int>(b) * dim + i, j) = blocks[b](i, j);
  return nullspace(stacked);
}

Vector normalize_leading(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) {
      const Cyclotomic inv = x.inverse();
      Vector out;
      for (const auto& y : v) out.push_back(y * inv);
      return out;
    }
  return v;
}

std::optional<Vector> semi_invariant_witness(const FiniteMatrixGroup& g, const FiniteMatrixGroup& derived, int d) {
  std::vector<Vector> w = fixed_subspace(derived, d);
  if (w.empty()) return std::nullopt;
  const int dim = static_cast<int>(w.front().size());
  for (const auto& gen : g.generators()) {
    if (w.size() == 1) break;
    const Matrix rho = sym_power_matrix(gen, d);
    const int r = matrix_order(gen);
    const Matrix b = from_columns(w, dim);
    const Matrix rb = rho * b;
    for (int j = 0; j < r; ++j) {
      const Matrix shifted = rb - b.scaled(root_of_unity(r, j));
      auto ker = nullspace(shifted);
      if (ker.empty()) continue;
      std::vector<Vector> next;
      for (const auto& c : ker) next.push_back(b * c);
      w = row_space_basis(next, dim);
      break;
    }
  }
  return normalize_leading(w.front());
}

}  // namespace wex
