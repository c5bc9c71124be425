#include "wex/matrix_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "wex/error.hpp"

namespace wex {

namespace {

bool has_big_entry(const Matrix& m) {
  for (const auto& x : m.entries())
    for (const auto& c : x.coefficients())
      if (!c.fits_small()) return true;
  return false;
}

Matrix matrix_power(const Matrix& m, long long k) {
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  const int cond = m.conductor();
  result.normalize(cond);
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result.normalize(cond);
}

}  // namespace

int matrix_order(const Matrix& m, std::size_t cap) {
  if (m.is_identity()) return 1;
  Matrix p = m;
  for (std::size_t k = 2; k <= cap; ++k) {
    p = p * m;
    if (p.is_identity()) return static_cast<int>(k);
    if (has_big_entry(p))
      throw domain_error("InfiniteOrderSuspected", "powers of a matrix grow without cycling");
  }
  throw domain_error("InfiniteOrderSuspected", "matrix powers do not cycle within " + std::to_string(cap) + " steps");
}

std::optional<int> FiniteMatrixGroup::index_of(const Matrix& m) const {
  if (m.rows() != degree_ || m.cols() != degree_) return std::nullopt;
  Matrix n(degree_, degree_);
  for (int i = 0; i < degree_; ++i)
    for (int j = 0; j < degree_; ++j) {
      auto x = rewrite_at_conductor(m(i, j), conductor_);
      if (!x) return std::nullopt;
      n(i, j) = std::move(*x);
    }
  auto it = index_.find(n);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int FiniteMatrixGroup::multiply(int a, int b) const {
  Matrix p = element(a) * element(b);
  p.normalize(conductor_);
  return index_.at(p);
}

int FiniteMatrixGroup::power(int a, long long k) const {
  const long long r = element_order(a);
  k %= r;
  if (k < 0) k += r;
  if (k == 0) return 0;
  if (k == 1) return a;
  return index_.at(matrix_power(element(a), k).normalize(conductor_));
}

int FiniteMatrixGroup::inverse(int a) const { return power(a, -1); }

FiniteMatrixGroup closure(const std::vector<Matrix>& generators, std::size_t cap) {
  if (generators.empty()) throw domain_error("ShapeMismatch", "closure without generators needs an explicit degree");
  return closure(generators.front().rows(), generators, cap);
}

FiniteMatrixGroup closure(int degree, const std::vector<Matrix>& generators, std::size_t cap) {
  FiniteMatrixGroup g;
  g.degree_ = degree;
  long long cond = 1;
  for (const auto& m : generators) {
    if (m.rows() != degree || m.cols() != degree)
      throw Error(ErrorKind::Validation, "ShapeMismatch", "generator is not " + std::to_string(degree) + "x" + std::to_string(degree));
    cond = lcm_int(cond, m.conductor());
  }
  g.conductor_ = static_cast<int>(cond);
  for (const auto& m : generators) {
    Matrix n = m;
    n.normalize(g.conductor_);
    if (determinant(n).is_zero()) throw domain_error("NotInvertible", "generator is singular");
    matrix_order(n, cap);
    g.generators_.push_back(std::move(n));
  }

  Matrix id = Matrix::identity(degree);
  id.normalize(g.conductor_);
  g.elements_.push_back(id);
  g.index_.emplace(id, 0);
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& gen : g.generators_) {
      Matrix y = g.elements_[head] * gen;
      y.normalize(g.conductor_);
      if (g.index_.count(y)) continue;
      if (g.elements_.size() >= cap)
        throw Error(ErrorKind::CapExceeded, "CapExceeded", "group order exceeds cap " + std::to_string(cap));
      g.index_.emplace(y, static_cast<int>(g.elements_.size()));
      g.elements_.push_back(std::move(y));
    }
  }

  // Conjugacy classes as orbits under conjugation by the generators.
  std::vector<Matrix> inv;
  for (const auto& gen : g.generators_) inv.push_back(*wex::inverse(gen));
  for (auto& m : inv) m.normalize(g.conductor_);
  const std::size_t n = g.elements_.size();
  std::vector<int> cls(n, -1);
  std::vector<ConjugacyClass> raw;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    const int id_c = static_cast<int>(raw.size());
    ConjugacyClass c;
    std::deque<int> queue{static_cast<int>(x)};
    cls[x] = id_c;
    while (!queue.empty()) {
      const int y = queue.front();
      queue.pop_front();
      c.members.push_back(y);
      for (std::size_t k = 0; k < g.generators_.size(); ++k) {
        Matrix z = inv[k] * g.elements_[static_cast<std::size_t>(y)] * g.generators_[k];
        z.normalize(g.conductor_);
        const int zi = g.index_.at(z);
        if (cls[static_cast<std::size_t>(zi)] < 0) {
          cls[static_cast<std::size_t>(zi)] = id_c;
          queue.push_back(zi);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    c.size = static_cast<int>(c.members.size());
    c.element_order = matrix_order(g.elements_[static_cast<std::size_t>(c.representative)], cap);
    raw.push_back(std::move(c));
  }
  std::vector<int> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    const auto& ca = raw[static_cast<std::size_t>(a)];
    const auto& cb = raw[static_cast<std::size_t>(b)];
    return std::tie(ca.element_order, ca.size, ca.representative) < std::tie(cb.element_order, cb.size, cb.representative);
  });
  g.class_of_.assign(n, 0);
  g.order_of_.assign(n, 1);
  long long e = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    ConjugacyClass c = std::move(raw[static_cast<std::size_t>(perm[i])]);
    for (int m : c.members) {
      g.class_of_[static_cast<std::size_t>(m)] = static_cast<int>(i);
      g.order_of_[static_cast<std::size_t>(m)] = c.element_order;
    }
    e = lcm_int(e, c.element_order);
    g.classes_.push_back(std::move(c));
  }
  g.exponent_ = static_cast<int>(e);
  return g;
}

std::vector<int> power_map(const FiniteMatrixGroup& g, long long k) {
  std::vector<int> out;
  out.reserve(g.classes().size());
  for (const auto& c : g.classes()) out.push_back(g.class_of(g.power(c.representative, k)));
  return out;
}

FiniteMatrixGroup commutator_subgroup(const FiniteMatrixGroup& g, std::size_t cap) {
  const auto& gens = g.generators();
  std::vector<Matrix> inv;
  for (const auto& m : gens) inv.push_back(g.element(g.inverse(*g.index_of(m))));
  std::vector<Matrix> comm;
  auto add_unique = [&](Matrix m) {
    m.normalize(g.conductor());
    if (m.is_identity()) return;
    for (const auto& c : comm)
      if (c == m) return;
    comm.push_back(std::move(m));
  };
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) add_unique(inv[a] * inv[b] * gens[a] * gens[b]);
  FiniteMatrixGroup h = closure(g.degree(), comm, cap);
  // Enlarge until normal in g.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < gens.size() && !changed; ++k) {
      for (const auto& x : h.generators()) {
        Matrix y = inv[k] * x * gens[k];
        y.normalize(g.conductor());
        if (!h.index_of(y)) {
          comm.push_back(std::move(y));
          h = closure(g.degree(), comm, cap);
          changed = true;
          break;
        }
      }
    }
  }
  return h;
}

std::vector<Cyclotomic> central_scalars(const FiniteMatrixGroup& g) {
  std::vector<Cyclotomic> out;
  for (const auto& m : g.elements())
    if (m.is_scalar()) out.push_back(m(0, 0));
  return out;
}

std::vector<EigenvalueMultiplicity> eigenvalue_multiplicities(const Matrix& m) {
  const int r = matrix_order(m);
  const int cond = static_cast<int>(lcm_int(m.conductor(), r));
  std::vector<Cyclotomic> traces;
  Matrix p = Matrix::identity(m.rows());
  for (int k = 0; k < r; ++k) {
    traces.push_back(p.trace());
    p = p * m;
  }
  std::vector<EigenvalueMultiplicity> out;
  for (int j = 0; j < r; ++j) {
    Cyclotomic s = Cyclotomic::zero(cond);
    for (int k = 0; k < r; ++k) {
      if (traces[static_cast<std::size_t>(k)].is_zero()) continue;
      s += traces[static_cast<std::size_t>(k)] * root_of_unity(r, -static_cast<long long>(j) * k);
    }
    const Rational mult = s.to_rational() / Rational(r);
    if (!mult.is_integer() || mult.sign() < 0)
      throw internal_error("InternalInconsistency", "eigenvalue multiplicity is not a non-negative integer");
    if (!mult.is_zero()) out.push_back({r, j, static_cast<int>(mult.small_num())});
  }
  return out;
}

bool is_reflection(const Matrix& m) {
  const int n = m.rows();
  if (n < 2 || m.is_scalar()) return false;
  const auto ev = eigenvalue_multiplicities(m);
  if (n == 2) {
    // On the projective line every point is a hyperplane; a reflection here
    // is an element fixing a line of C^2 pointwise.
    for (const auto& e : ev)
      if (e.exponent == 0) return e.multiplicity == 1;
    return false;
  }
  if (ev.size() != 2) return false;
  return ev[0].multiplicity == n - 1 || ev[1].multiplicity == n - 1;
}

std::optional<int> contains_reflections(const FiniteMatrixGroup& g) {
  for (const auto& c : g.classes())
    if (is_reflection(g.element(c.representative))) return c.representative;
  return std::nullopt;
}

std::vector<Matrix> diagonal_torus_generators(int degree, int k) {
  if (k < degree)
    throw domain_error("KTooSmall", "k = " + std::to_string(k) + " is smaller than the degree " + std::to_string(degree));
  std::vector<Matrix> out;
  for (int i = 1; i < degree; ++i) {
    Matrix m = Matrix::identity(degree);
    m(0, 0) = root_of_unity(k, -1);
    m(i, i) = root_of_unity(k, 1);
    m.normalize(k);
    out.push_back(std::move(m));
  }
  return out;
}

bool contains_diagonal_torus(const FiniteMatrixGroup& g, int k) {
  const auto gammas = diagonal_torus_generators(g.degree(), k);
  for (const auto& gamma : gammas) {
    // Re-express zeta_k inside the group's field when possible.
    Matrix m = Matrix::identity(g.degree());
    auto lo = root_of_unity_in(g.conductor(), k, -1);
    auto hi = root_of_unity_in(g.conductor(), k, 1);
    if (!lo || !hi) return false;
    for (int i = 1; i < g.degree(); ++i)
      if (gamma(i, i) == root_of_unity(k, 1)) {
        m(0, 0) = *lo;
        m(i, i) = *hi;
      }
    if (!g.index_of(m)) return false;
  }
  return true;
}

}  // namespace wex
