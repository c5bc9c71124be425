// Writes the bundled group and table documents into a directory.
//
// 6.A6 is built as the fibre product of 3.A6 (hyperoval stabilizer in
// SL(3,4), acting on the 63 nonzero vectors of F_4^3) and 2.A6 = SL(2,9)
// (acting on the 80 nonzero vectors of F_9^2) over A6, and its character
// table comes from the Dixon core through the class-algebra interface.
#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>

#include "test_groups.hpp"
#include "wex/constructions.hpp"
#include "wex/dixon.hpp"
#include "wex/error.hpp"
#include "wex/io.hpp"

using namespace wex;

namespace {

// ---- small finite fields ---------------------------------------------------

// F_4 = {0, 1, a, a+1} coded 0..3, addition is xor.
int f4_mul(int x, int y) {
  static const int lg[4] = {-1, 0, 1, 2}, ex[3] = {1, 2, 3};
  if (!x || !y) return 0;
  return ex[(lg[x] + lg[y]) % 3];
}
int f4_add(int x, int y) { return x ^ y; }

// F_9 = F_3[i]/(i^2 + 1), x = a + 3b for a + b i.
int f9_add(int x, int y) { return (x % 3 + y % 3) % 3 + 3 * ((x / 3 + y / 3) % 3); }
int f9_mul(int x, int y) {
  const int a = x % 3, b = x / 3, c = y % 3, d = y / 3;
  return ((a * c - b * d) % 3 + 3) % 3 + 3 * ((a * d + b * c) % 3);
}

template <int N>
using FMat = std::array<int, N * N>;

template <int N, int Q>
struct Field {
  static int add(int x, int y) { return Q == 4 ? f4_add(x, y) : f9_add(x, y); }
  static int mul(int x, int y) { return Q == 4 ? f4_mul(x, y) : f9_mul(x, y); }
  static int neg(int x) { return Q == 4 ? x : f9_mul(x, 2); }

  static FMat<N> mul(const FMat<N>& a, const FMat<N>& b) {
    FMat<N> c{};
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        int s = 0;
        for (int k = 0; k < N; ++k) s = add(s, mul(a[i * N + k], b[k * N + j]));
        c[i * N + j] = s;
      }
    return c;
  }
  static int det(const FMat<N>& m) {
    if constexpr (N == 2) return add(mul(m[0], m[3]), neg(mul(m[1], m[2])));
    int s = 0;
    for (int j = 0; j < 3; ++j) {
      int t = mul(m[j], mul(m[3 + (j + 1) % 3], m[6 + (j + 2) % 3]));
      int u = mul(m[j], mul(m[3 + (j + 2) % 3], m[6 + (j + 1) % 3]));
      s = add(s, add(t, neg(u)));
    }
    return s;
  }
  static bool scalar(const FMat<N>& m) {
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if ((i == j && m[i * N + j] != m[0]) || (i != j && m[i * N + j] != 0)) return false;
    return true;
  }
  // Order modulo scalars.
  static int proj_order(const FMat<N>& m) {
    FMat<N> p = m;
    for (int k = 1; k <= 60; ++k) {
      if (scalar(p)) return k;
      p = mul(p, m);
    }
    return -1;
  }
  static int vec_count() {
    int n = 1;
    for (int i = 0; i < N; ++i) n *= Q;
    return n;
  }
  // Action on nonzero column vectors, coded base Q, as a permutation of 0..Q^N-2.
  static std::vector<int> perm(const FMat<N>& m) {
    const int total = vec_count();
    std::vector<int> out(static_cast<std::size_t>(total - 1));
    for (int v = 1; v < total; ++v) {
      int x[N], y[N];
      for (int i = 0, t = v; i < N; ++i, t /= Q) x[i] = t % Q;
      int code = 0;
      for (int i = N - 1; i >= 0; --i) {
        int s = 0;
        for (int k = 0; k < N; ++k) s = add(s, mul(m[i * N + k], x[k]));
        y[i] = s;
        code = code * Q + y[i];
      }
      out[static_cast<std::size_t>(v - 1)] = code - 1;
    }
    return out;
  }
};

using F4 = Field<3, 4>;
using F9 = Field<2, 9>;

// Enumerates all N x N matrices over F_Q with determinant 1 passing `keep`.
template <int N, int Q>
std::vector<FMat<N>> sl_elements(const std::function<bool(const FMat<N>&)>& keep) {
  std::vector<FMat<N>> out;
  FMat<N> m{};
  long long total = 1;
  for (int i = 0; i < N * N; ++i) total *= Q;
  for (long long code = 0; code < total; ++code) {
    long long t = code;
    for (int i = 0; i < N * N; ++i, t /= Q) m[i] = static_cast<int>(t % Q);
    if (Field<N, Q>::det(m) == 1 && keep(m)) out.push_back(m);
  }
  return out;
}

// Projective point of a nonzero F_4^3 vector, scaled to leading coordinate 1.
std::array<int, 3> f4_point(std::array<int, 3> v) {
  int lead = 0;
  while (v[static_cast<std::size_t>(lead)] == 0) ++lead;
  int inv = 1;
  for (int c = 1; c < 4; ++c)
    if (f4_mul(v[static_cast<std::size_t>(lead)], c) == 1) inv = c;
  for (auto& x : v) x = f4_mul(x, inv);
  return v;
}

bool preserves_hyperoval(const FMat<3>& m) {
  static const std::vector<std::array<int, 3>> oval = [] {
    std::vector<std::array<int, 3>> pts;
    for (int t = 0; t < 4; ++t) pts.push_back({1, t, f4_mul(t, t)});
    pts.push_back({0, 0, 1});
    pts.push_back({0, 1, 0});
    return pts;
  }();
  for (const auto& p : oval) {
    std::array<int, 3> img{};
    for (int i = 0; i < 3; ++i) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s = f4_add(s, f4_mul(m[static_cast<std::size_t>(i * 3 + k)], p[static_cast<std::size_t>(k)]));
      img[static_cast<std::size_t>(i)] = s;
    }
    if (std::find(oval.begin(), oval.end(), f4_point(img)) == oval.end()) return false;
  }
  return true;
}

// ---- permutation groups ----------------------------------------------------

using Perm = std::vector<std::uint16_t>;

Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::uint16_t>(i);
  return c;
}

struct PermGroup {
  std::vector<Perm> elements;
  std::map<Perm, int> index;
  std::vector<Perm> gens;
};

// Breadth-first closure; returns false when more than `cap` elements appear.
bool perm_closure(PermGroup& g, std::size_t cap) {
  Perm id(g.gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  g.elements = {id};
  g.index = {{id, 0}};
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    for (const auto& s : g.gens) {
      Perm x = compose(g.elements[i], s);
      if (g.index.count(x)) continue;
      if (g.elements.size() >= cap) return false;
      g.index.emplace(x, static_cast<int>(g.elements.size()));
      g.elements.push_back(std::move(x));
    }
  return true;
}

Perm pair_perm(const std::vector<int>& a, const std::vector<int>& b) {
  Perm p;
  for (int x : a) p.push_back(static_cast<std::uint16_t>(x));
  for (int x : b) p.push_back(static_cast<std::uint16_t>(x + static_cast<int>(a.size())));
  return p;
}

template <typename F, int N>
bool standard_pair(const FMat<N>& a, const FMat<N>& b) {
  if (F::proj_order(a) != 2 || F::proj_order(b) != 4) return false;
  const auto ab = F::mul(a, b);
  if (F::proj_order(ab) != 5) return false;
  return F::proj_order(F::mul(ab, F::mul(ab, b))) == 5;
}

CharacterTable six_a6_table() {
  const auto e1 = sl_elements<3, 4>(preserves_hyperoval);
  const auto e2 = sl_elements<2, 9>([](const FMat<2>&) { return true; });
  if (e1.size() != 1080 || e2.size() != 720) throw internal_error("InternalInconsistency", "unexpected 3.A6 / 2.A6 orders");

  // Standard generators of the A6 quotient on each side.
  std::optional<std::pair<FMat<3>, FMat<3>>> s1;
  for (const auto& a : e1) {
    for (const auto& b : e1)
      if (standard_pair<F4, 3>(a, b)) {
        s1 = std::make_pair(a, b);
        break;
      }
    if (s1) break;
  }
  if (!s1) throw internal_error("InternalInconsistency", "no standard generators in 3.A6");

  PermGroup g;
  const auto pa1 = F4::perm(s1->first), pb1 = F4::perm(s1->second);
  for (const auto& a : e2) {
    if (F9::proj_order(a) != 2) continue;
    for (const auto& b : e2) {
      if (!standard_pair<F9, 2>(a, b)) continue;
      g.gens = {pair_perm(pa1, F9::perm(a)), pair_perm(pb1, F9::perm(b))};
      if (perm_closure(g, 2160) && g.elements.size() == 2160) goto found;
    }
  }
  throw internal_error("InternalInconsistency", "no matching generators for the fibre product");
found:
  const std::size_t n = g.elements.size();
  std::vector<Perm> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = inverse(g.elements[i]);

  // Conjugacy classes as orbits under conjugation by the generators.
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> members;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.push_back({static_cast<int>(i)});
    cls[i] = id;
    for (std::size_t q = 0; q < members.back().size(); ++q) {
      const Perm& x = g.elements[static_cast<std::size_t>(members.back()[q])];
      for (std::size_t s = 0; s < g.gens.size(); ++s) {
        const Perm y = compose(compose(inverse(g.gens[s]), x), g.gens[s]);
        const int j = g.index.at(y);
        if (cls[static_cast<std::size_t>(j)] < 0) {
          cls[static_cast<std::size_t>(j)] = id;
          members.back().push_back(j);
        }
      }
    }
  }
  auto order_of = [&](int i) {
    const Perm& x = g.elements[static_cast<std::size_t>(i)];
    Perm p = x;
    int k = 1;
    while (p != g.elements[0]) {
      p = compose(p, x);
      ++k;
    }
    return k;
  };
  for (auto& m : members) std::sort(m.begin(), m.end());
  std::vector<int> eo(members.size());
  for (std::size_t c = 0; c < members.size(); ++c) eo[c] = order_of(members[c][0]);
  std::vector<std::size_t> perm(members.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return std::make_tuple(eo[a], members[a].size(), members[a][0]) < std::make_tuple(eo[b], members[b].size(), members[b][0]);
  });
  std::vector<std::vector<int>> cm;
  std::vector<int> ceo;
  for (std::size_t c : perm) {
    cm.push_back(members[c]);
    ceo.push_back(eo[c]);
  }
  for (std::size_t c = 0; c < cm.size(); ++c)
    for (int x : cm[c]) cls[static_cast<std::size_t>(x)] = static_cast<int>(c);

  const std::size_t r = cm.size();
  int exponent = 1;
  for (int o : ceo) exponent = std::lcm(exponent, o);

  auto cs = std::make_shared<ClassStructure>();
  cs->order = n;
  cs->conductor = exponent;
  cs->power_maps.assign(static_cast<std::size_t>(exponent), std::vector<int>(r, 0));
  for (std::size_t c = 0; c < r; ++c) {
    cs->sizes.push_back(static_cast<int>(cm[c].size()));
    cs->element_orders.push_back(ceo[c]);
    const Perm& x = g.elements[static_cast<std::size_t>(cm[c][0])];
    std::vector<int> pw;
    Perm p = g.elements[0];
    for (int j = 0; j < ceo[c]; ++j) {
      pw.push_back(cls[static_cast<std::size_t>(g.index.at(p))]);
      p = compose(p, x);
    }
    for (int k = 0; k < exponent; ++k)
      cs->power_maps[static_cast<std::size_t>(k)][c] = pw[static_cast<std::size_t>(k % ceo[c])];
  }

  // T[x][k] = class of x^-1 z_k.
  std::vector<std::vector<int>> t(n, std::vector<int>(r));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < r; ++k)
      t[x][k] = cls[static_cast<std::size_t>(g.index.at(compose(inv[x], g.elements[static_cast<std::size_t>(cm[k][0])])))];

  ClassAlgebra alg;
  alg.classes = cs;
  alg.exponent = exponent;
  alg.structure_matrix = [&](int i) {
    std::vector<std::vector<long long>> m(r, std::vector<long long>(r, 0));
    for (int x : cm[static_cast<std::size_t>(i)])
      for (std::size_t k = 0; k < r; ++k) ++m[static_cast<std::size_t>(t[static_cast<std::size_t>(x)][k])][k];
    return m;
  };
  CharacterTable table = dixon_table(alg);

  // Natural character: a 6-dimensional irreducible on which a central element
  // of order 6 acts as a primitive sixth root of unity.
  int central6 = -1;
  for (std::size_t c = 0; c < r; ++c)
    if (cs->sizes[c] == 1 && ceo[c] == 6) {
      central6 = static_cast<int>(c);
      break;
    }
  if (central6 < 0) throw internal_error("InternalInconsistency", "no central element of order 6");
  const Cyclotomic z6 = root_of_unity(6, 1);
  for (std::size_t i = 0; i < table.irreducibles.size(); ++i) {
    const auto& chi = table.irreducibles[i];
    if (chi[0] != Cyclotomic(6)) continue;
    const Cyclotomic v = chi[central6];
    if (v == z6.scaled(6) || v == z6.conj().scaled(6)) {
      table.natural_index = static_cast<int>(i);
      table.natural = chi;
      break;
    }
  }
  if (!table.natural) throw internal_error("InternalInconsistency", "no faithful 6-dimensional irreducible");
  return table;
}

void write_group(const std::string& dir, const std::string& file, const std::string& name,
                 const std::string& provenance, const std::vector<Matrix>& gens) {
  GroupSpec spec;
  spec.degree = gens.front().rows();
  spec.conductor = 1;
  for (const auto& g : gens) spec.conductor = std::lcm(spec.conductor, g.conductor());
  spec.generators = gens;
  spec.name = name;
  spec.provenance = provenance;
  write_file(dir + "/" + file, emit_group_spec(spec));
  std::cout << "wrote " << file << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data";
  using namespace testgroups;
  try {
    write_group(dir, "heisenberg3.json", "heisenberg3", "construct heisenberg 3", heisenberg(3));
    write_group(dir, "heisenberg5.json", "heisenberg5", "construct heisenberg 5", heisenberg(5));
    write_group(dir, "s4perm.json", "S4 permutation representation", "permutation matrices", s4_perm());
    write_group(dir, "a5dim5.json", "A5 on the sum-zero hyperplane of P^1(F_5)",
                "PSL(2,5) acting on six points, deleted permutation representation", a5_dim5());
    write_group(dir, "s5dim5.json", "S5 on the sum-zero hyperplane of P^1(F_5)",
                "PGL(2,5) acting on six points, deleted permutation representation", s5_dim5());
    write_group(dir, "binary_icosahedral.json", "2.A5 in SL(2)", "icosahedral generators at conductor 5",
                binary_icosahedral());
    write_group(dir, "twisted_cubic.json", "Sym^3 of 2.A5", "third symmetric power of binary_icosahedral",
                twisted_cubic_group());
    write_group(dir, "tensor_2a5_a4.json", "2.A5 (x) A4", "tensor product of binary_icosahedral and monomial A4",
                tensor_2a5_a4());
    write_group(dir, "tensor_2a5_h3.json", "2.A5 (x) H3", "tensor product of binary_icosahedral and heisenberg3",
                tensor_2a5_h3());
    write_group(dir, "reducible5.json", "A4 (+) trivial", "A4 permuting four coordinates", reducible_dim5());
    write_group(dir, "diagonal_n4k5.json", "diagonal n=4 k=5 cyclic", "construct diagonal --n 4 --k 5 --perm cyclic",
                diagonal_group(4, 5, DiagonalPerm::Cyclic));
    CharacterTable t = six_a6_table();
    write_file(dir + "/6a6.table.json", emit_table_spec(t));
    std::cout << "wrote 6a6.table.json\n";
  } catch (const std::exception& e) {
    std::cerr << "fixtures: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
