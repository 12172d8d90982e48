#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qed/errors.hpp"
#include "qed/orbifold.hpp"

namespace qed::orb {

using Perm = std::vector<int>;

namespace detail {

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Apply a, then b.
inline Perm perm_mul(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

inline Perm perm_inverse(const Perm& a) {
  Perm out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

inline bool perm_is_identity(const Perm& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<int>(i)) return false;
  return true;
}

inline bool is_permutation(const Perm& a, int degree) {
  if (static_cast<int>(a.size()) != degree) return false;
  std::vector<char> seen(degree, 0);
  for (int v : a) {
    if (v < 0 || v >= degree || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Order from the cycle structure.
inline long long perm_order(const Perm& a) {
  std::vector<char> seen(a.size(), 0);
  long long ord = 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

/**
 * Element-indexed finite group. Index 0 is always the identity; mul
 * multiplies element indices; to_perm realizes an element as a permutation
 * through a right action, so that index products and permutation products
 * (apply left factor first) match. by_order caches element indices grouped
 * by their exact order.
 */
struct GroupModel {
  std::string name;
  long long order = 0;
  int degree = 0;
  int family_rank = 0;
  bool abelian = false;
  std::function<int(int, int)> mul;
  std::function<Perm(int)> to_perm;
  std::vector<std::vector<int>> by_order;
};

inline long long element_order(const GroupModel& g, int x) {
  long long ord = 1;
  for (int cur = x; cur != 0; cur = g.mul(cur, x)) ++ord;
  return ord;
}

inline int element_inverse(const GroupModel& g, int x) {
  int prev = 0;
  for (int cur = x; cur != 0; cur = g.mul(cur, x)) prev = cur;
  return prev;
}

inline void cache_orders(GroupModel& g) {
  g.by_order.assign(static_cast<size_t>(g.order) + 1, {});
  for (int x = 0; x < g.order; ++x)
    g.by_order[static_cast<size_t>(element_order(g, x))].push_back(x);
}

inline GroupModel abelian_model(std::vector<long long> factors) {
  GroupModel g;
  g.abelian = true;
  g.family_rank = -1;
  g.order = 1;
  for (long long n : factors) g.order *= n;
  g.degree = 0;
  for (long long n : factors) g.degree += static_cast<int>(n);
  if (g.degree == 0) g.degree = 1;
  if (factors.empty()) {
    g.name = "C1";
  } else {
    for (size_t i = 0; i < factors.size(); ++i)
      g.name += (i ? "x" : "") + ("C" + std::to_string(factors[i]));
  }
  auto decode = [factors](int idx) {
    std::vector<int> t(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
      t[i] = idx % static_cast<int>(factors[i]);
      idx /= static_cast<int>(factors[i]);
    }
    return t;
  };
  g.mul = [factors, decode](int x, int y) {
    auto a = decode(x), b = decode(y);
    int idx = 0;
    for (size_t i = factors.size(); i-- > 0;)
      idx = idx * static_cast<int>(factors[i]) + (a[i] + b[i]) % static_cast<int>(factors[i]);
    return idx;
  };
  int degree = g.degree;
  g.to_perm = [factors, decode, degree](int x) {
    if (factors.empty()) return perm_identity(1);
    auto t = decode(x);
    Perm p(degree);
    int off = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
      int n = static_cast<int>(factors[i]);
      for (int j = 0; j < n; ++j) p[off + j] = off + (j + t[i]) % n;
      off += n;
    }
    return p;
  };
  return g;
}

// Order 2n: indices k < n are rotations r^k, n + k is r^k s, with s r s = r^-1.
inline GroupModel dihedral_model(int n) {
  GroupModel g;
  g.name = "D" + std::to_string(n);
  g.order = 2 * n;
  g.degree = n;
  g.family_rank = 1;
  g.mul = [n](int x, int y) {
    int i = x % n, j = y % n;
    bool rx = x >= n, ry = y >= n;
    // r^i [s] * r^j [s]: the left reflection flips the sign of j.
    int k = ((rx ? i - j : i + j) % n + n) % n;
    return k + (rx != ry ? n : 0);
  };
  // Right action on vertices: rotations shift, r^i s sends k to -(k + i).
  g.to_perm = [n](int x) {
    Perm p(n);
    int i = x % n;
    for (int k = 0; k < n; ++k) p[k] = x < n ? (k + i) % n : (2 * n - k - i) % n;
    return p;
  };
  return g;
}

// Order 4n: indices k < 2n are a^k, 2n + k is a^k b, with b^2 = a^n and
// b a = a^-1 b. n = 2 is the quaternion group.
inline GroupModel dicyclic_model(int n) {
  GroupModel g;
  g.name = n == 2 ? "Q8" : "Dic" + std::to_string(n);
  g.order = 4 * n;
  g.degree = 4 * n;
  g.family_rank = 0;
  int two_n = 2 * n;
  g.mul = [n, two_n](int x, int y) {
    int i = x % two_n, j = y % two_n;
    bool bx = x >= two_n, by = y >= two_n;
    if (!bx) return ((i + j) % two_n) + (by ? two_n : 0);
    // (a^i b)(a^j) = a^(i-j) b ; (a^i b)(a^j b) = a^(i-j+n).
    int k = ((i - j) % two_n + two_n) % two_n;
    return by ? (k + n) % two_n : k + two_n;
  };
  auto mul_copy = g.mul;
  int order = g.order;
  g.to_perm = [mul_copy, order](int x) {
    Perm p(order);
    for (int k = 0; k < order; ++k) p[k] = mul_copy(k, x);
    return p;
  };
  return g;
}

// Order m^3: triples (x, y, z) with (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x y'),
// all mod m. The commutator of the two translation generators spans the
// center, so commutator values of every order dividing m are available.
inline GroupModel heisenberg_model(int m) {
  GroupModel g;
  g.name = "H(" + std::to_string(m) + ")";
  g.order = static_cast<long long>(m) * m * m;
  g.degree = static_cast<int>(g.order);
  g.family_rank = 2;
  g.mul = [m](int a, int b) {
    int x = a % m, y = (a / m) % m, z = a / (m * m);
    int x2 = b % m, y2 = (b / m) % m, z2 = b / (m * m);
    int nx = (x + x2) % m, ny = (y + y2) % m, nz = (z + z2 + x * y2) % m;
    return nx + m * (ny + m * nz);
  };
  auto mul_copy = g.mul;
  int order = static_cast<int>(g.order);
  g.to_perm = [mul_copy, order](int x) {
    Perm p(order);
    for (int k = 0; k < order; ++k) p[k] = mul_copy(k, x);
    return p;
  };
  return g;
}

// Shared scaffolding for the symmetric and alternating families: elements
// are the sorted permutation lists (the identity is lexicographically first).
inline GroupModel perm_family_model(std::string name, int d, bool even_only, int rank) {
  GroupModel g;
  g.name = std::move(name);
  g.degree = d;
  g.family_rank = rank;
  auto elements = std::make_shared<std::vector<Perm>>();
  Perm p = perm_identity(d);
  do {
    if (!even_only) {
      elements->push_back(p);
      continue;
    }
    int inversions = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) elements->push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  g.order = static_cast<long long>(elements->size());
  g.mul = [elements](int x, int y) {
    Perm prod = perm_mul((*elements)[x], (*elements)[y]);
    auto it = std::lower_bound(elements->begin(), elements->end(), prod);
    return static_cast<int>(it - elements->begin());
  };
  g.to_perm = [elements](int x) { return (*elements)[x]; };
  return g;
}

inline GroupModel symmetric_model(int d) {
  return perm_family_model("S" + std::to_string(d), d, false, 4);
}

inline GroupModel alternating_model(int d) {
  return perm_family_model("A" + std::to_string(d), d, true, 3);
}

// SL(2, q) acting on the q^2 - 1 nonzero row vectors.
inline GroupModel sl2_model(int q) {
  GroupModel g;
  g.name = "SL(2," + std::to_string(q) + ")";
  g.degree = q * q - 1;
  g.family_rank = 5;
  using Mat = std::array<int, 4>;
  auto elements = std::make_shared<std::vector<Mat>>();
  auto index = std::make_shared<std::map<Mat, int>>();
  elements->push_back({1, 0, 0, 1});
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d)
          if ((a * d - b * c) % q == 1 || (a * d - b * c) % q == 1 - q) {
            Mat m{a, b, c, d};
            if (m != Mat{1, 0, 0, 1}) elements->push_back(m);
          }
  for (size_t i = 0; i < elements->size(); ++i) (*index)[(*elements)[i]] = static_cast<int>(i);
  g.order = static_cast<long long>(elements->size());
  g.mul = [elements, index, q](int x, int y) {
    const Mat& m = (*elements)[x];
    const Mat& n = (*elements)[y];
    Mat prod{(m[0] * n[0] + m[1] * n[2]) % q, (m[0] * n[1] + m[1] * n[3]) % q,
             (m[2] * n[0] + m[3] * n[2]) % q, (m[2] * n[1] + m[3] * n[3]) % q};
    return index->at(prod);
  };
  g.to_perm = [elements, q](int x) {
    const Mat& m = (*elements)[x];
    auto vec_index = [q](int v0, int v1) { return v0 * q + v1 - 1; };  // skip (0,0)
    Perm p(q * q - 1);
    for (int v0 = 0; v0 < q; ++v0)
      for (int v1 = 0; v1 < q; ++v1) {
        if (v0 == 0 && v1 == 0) continue;
        int w0 = (v0 * m[0] + v1 * m[2]) % q;  // row vector times matrix
        int w1 = (v0 * m[1] + v1 * m[3]) % q;
        p[vec_index(v0, v1)] = vec_index(w0, w1);
      }
    return p;
  };
  return g;
}

inline GroupModel product_model(const GroupModel& a, const GroupModel& b) {
  GroupModel g;
  g.name = a.name + "x" + b.name;
  g.order = a.order * b.order;
  g.degree = a.degree + b.degree;
  g.family_rank = 6;
  g.abelian = a.abelian && b.abelian;
  int border = static_cast<int>(b.order);
  auto amul = a.mul, bmul = b.mul;
  g.mul = [amul, bmul, border](int x, int y) {
    return amul(x / border, y / border) * border + bmul(x % border, y % border);
  };
  auto aperm = a.to_perm, bperm = b.to_perm;
  int adeg = a.degree;
  g.to_perm = [aperm, bperm, border, adeg](int x) {
    Perm pa = aperm(x / border), pb = bperm(x % border);
    Perm p(pa.size() + pb.size());
    for (size_t i = 0; i < pa.size(); ++i) p[i] = pa[i];
    for (size_t i = 0; i < pb.size(); ++i) p[adeg + i] = adeg + pb[i];
    return p;
  };
  return g;
}

/**
 * Fixed nonabelian candidate list, sorted by (order, family, name) with the
 * dicyclic family ranked ahead of the dihedral one at equal order. The
 * search walks it after the abelian stream.
 */
inline const std::vector<GroupModel>& nonabelian_catalog() {
  static const std::vector<GroupModel> catalog = [] {
    std::vector<GroupModel> v;
    for (int n = 2; n <= 16; ++n) v.push_back(dicyclic_model(n));
    for (int n = 4; n <= 16; ++n) v.push_back(dihedral_model(n));
    for (int m = 3; m <= 8; ++m) v.push_back(heisenberg_model(m));
    for (int d = 4; d <= 6; ++d) v.push_back(alternating_model(d));
    for (int d = 3; d <= 6; ++d) v.push_back(symmetric_model(d));
    v.push_back(sl2_model(3));
    v.push_back(sl2_model(5));
    std::vector<GroupModel> bases;
    bases.push_back(symmetric_model(3));
    bases.push_back(dihedral_model(4));
    bases.push_back(dicyclic_model(2));
    bases.push_back(dicyclic_model(3));
    bases.push_back(dihedral_model(6));
    bases.push_back(alternating_model(4));
    bases.push_back(symmetric_model(4));
    bases.push_back(alternating_model(5));
    bases.push_back(symmetric_model(5));
    for (const auto& base : bases)
      for (long long k = 2; k <= 6; ++k) v.push_back(product_model(base, abelian_model({k})));
    v.push_back(product_model(bases[0], bases[0]));  // S3 x S3
    v.push_back(product_model(bases[0], bases[1]));  // S3 x D4
    std::erase_if(v, [](const GroupModel& g) { return g.order > 720; });
    std::stable_sort(v.begin(), v.end(), [](const GroupModel& x, const GroupModel& y) {
      return std::tie(x.order, x.family_rank, x.name) < std::tie(y.order, y.family_rank, y.name);
    });
    for (auto& g : v) cache_orders(g);
    return v;
  }();
  return catalog;
}

// Commutator value set of a group with one witness pair per value, cached by
// group name (the catalog is fixed, and abelian groups bypass the cache).
struct CommutatorData {
  std::vector<int> values;                     // ascending
  std::vector<std::array<int, 2>> witness;     // by value; {-1,-1} if absent
};

inline const CommutatorData& commutator_values(const GroupModel& g) {
  static std::map<std::string, CommutatorData> cache;
  auto it = cache.find(g.name);
  if (it != cache.end()) return it->second;
  CommutatorData data;
  data.witness.assign(static_cast<size_t>(g.order), {-1, -1});
  if (g.abelian) {
    data.values = {0};
    data.witness[0] = {0, 0};
  } else {
    std::vector<int> inv(static_cast<size_t>(g.order));
    for (int x = 0; x < g.order; ++x) inv[x] = element_inverse(g, x);
    // The handle relator reads a b a^-1 b^-1, so compute exactly that word.
    for (int a = 0; a < g.order; ++a) {
      for (int b = 0; b < g.order; ++b) {
        int c = g.mul(g.mul(a, b), g.mul(inv[a], inv[b]));
        if (data.witness[c][0] < 0) {
          data.witness[c] = {a, b};
          data.values.push_back(c);
        }
      }
    }
    std::sort(data.values.begin(), data.values.end());
  }
  return cache.emplace(g.name, std::move(data)).first->second;
}

struct SearchResult {
  std::vector<int> handles;  // 2 genus element indices: a1, b1, a2, b2, ...
  std::vector<int> cones;    // r element indices
};

/**
 * Looks for cone images of exact orders and handle images whose relator
 * product closes up, by folding cone choices value by value (keeping one
 * witness tuple per reachable group element) and intersecting with the set
 * of products of `genus` commutator values.
 */
inline std::optional<SearchResult> search_in_model(const GroupModel& g, long long genus,
                                                   const std::vector<long long>& orders) {
  size_t n = static_cast<size_t>(g.order);
  for (long long m : orders)
    if (m > g.order || g.by_order[static_cast<size_t>(m)].empty()) return std::nullopt;

  // Reachable products x_1 ... x_j with one back-trace per value.
  struct Step {
    int prev = -1, element = -1;
  };
  std::vector<std::vector<Step>> fold(orders.size() + 1, std::vector<Step>(n));
  std::vector<char> reached(n, 0), next(n, 0);
  reached[0] = 1;
  fold[0][0] = {0, -1};
  for (size_t j = 0; j < orders.size(); ++j) {
    std::fill(next.begin(), next.end(), 0);
    for (int v = 0; v < g.order; ++v) {
      if (!reached[v]) continue;
      for (int x : g.by_order[static_cast<size_t>(orders[j])]) {
        int w = g.mul(v, x);
        if (!next[w]) {
          next[w] = 1;
          fold[j + 1][w] = {v, x};
        }
      }
    }
    reached.swap(next);
    if (std::none_of(reached.begin(), reached.end(), [](char c) { return c != 0; }))
      return std::nullopt;
  }

  // Products of `genus` commutator values, again with back-traces.
  const CommutatorData* comm = nullptr;
  std::vector<std::vector<Step>> tfold;
  std::vector<char> treach(n, 0);
  treach[0] = 1;
  if (genus > 0) {
    comm = &commutator_values(g);
    tfold.assign(static_cast<size_t>(genus) + 1, std::vector<Step>(n));
    std::vector<char> tnext(n, 0);
    tfold[0][0] = {0, -1};
    for (long long level = 0; level < genus; ++level) {
      std::fill(tnext.begin(), tnext.end(), 0);
      for (int v = 0; v < g.order; ++v) {
        if (!treach[v]) continue;
        for (int c : comm->values) {
          int w = g.mul(v, c);
          if (!tnext[w]) {
            tnext[w] = 1;
            tfold[static_cast<size_t>(level) + 1][w] = {v, c};
          }
        }
      }
      treach.swap(tnext);
    }
  }

  // The relator wants (commutator product) * (cone product) = identity.
  for (int f = 0; f < g.order; ++f) {
    if (!reached[f]) continue;
    int t = element_inverse(g, f);
    if (!treach[t]) continue;
    SearchResult res;
    res.cones.resize(orders.size());
    for (size_t j = orders.size(); j-- > 0;) {
      res.cones[j] = fold[j + 1][f].element;
      f = fold[j + 1][f].prev;
    }
    res.handles.resize(static_cast<size_t>(2 * genus));
    for (long long level = genus; level > 0; --level) {
      int c = tfold[static_cast<size_t>(level)][t].element;
      res.handles[static_cast<size_t>(2 * (level - 1))] = comm->witness[c][0];
      res.handles[static_cast<size_t>(2 * (level - 1)) + 1] = comm->witness[c][1];
      t = tfold[static_cast<size_t>(level)][t].prev;
    }
    return res;
  }
  return std::nullopt;
}

// Any abelian quotient needs, at every prime, at least two cone orders
// attaining the maximal p-valuation: a lone maximal p-part cannot cancel.
inline bool abelian_feasible(const std::vector<long long>& orders) {
  long long L = 1;
  for (long long m : orders) L = std::lcm(L, m);
  for (long long p = 2; p <= L; ++p) {
    if (L % p != 0) continue;
    bool prime = true;
    for (long long q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    int max_v = 0;
    int attainers = 0;
    for (long long m : orders) {
      int v = 0;
      while (m % p == 0) {
        m /= p;
        ++v;
      }
      if (v > max_v) {
        max_v = v;
        attainers = 1;
      } else if (v == max_v && v > 0) {
        ++attainers;
      }
    }
    if (max_v > 0 && attainers == 1) return false;
  }
  return true;
}

// Invariant-factor chains d1 | d2 | d3 (each dividing L) of order <= bound,
// sorted by (order, length, factors).
inline std::vector<std::vector<long long>> abelian_factor_chains(long long L, long long bound) {
  std::vector<long long> divs;
  for (long long d = 2; d <= L; ++d)
    if (L % d == 0) divs.push_back(d);
  std::vector<std::vector<long long>> chains{{}};
  for (long long d1 : divs) {
    if (d1 > bound) continue;
    chains.push_back({d1});
    for (long long d2 : divs) {
      if (d1 % d2 != 0 || d1 * d2 > bound) continue;
      chains.push_back({d1, d2});
      for (long long d3 : divs)
        if (d2 % d3 == 0 && d1 * d2 * d3 <= bound) chains.push_back({d1, d2, d3});
    }
  }
  std::stable_sort(chains.begin(), chains.end(),
                   [](const std::vector<long long>& a, const std::vector<long long>& b) {
                     long long pa = 1, pb = 1;
                     for (long long x : a) pa *= x;
                     for (long long x : b) pb *= x;
                     return std::tie(pa, a) < std::tie(pb, b);
                   });
  return chains;
}

}  // namespace detail

/**
 * A finite quotient of the orbifold group in which every cone generator
 * keeps its exact order. Images are permutations; index products compose
 * left to right (apply the left factor first).
 */
struct QuotientWitness {
  std::string group_name;
  long long target_order = 0;  // order of the subgroup the images generate
  int degree = 0;
  std::vector<Perm> handle_images;  // a1, b1, ..., a_g, b_g
  std::vector<Perm> cone_images;    // x_1, ..., x_r
};

namespace detail {

inline long long generated_order(const std::vector<Perm>& gens, int degree, long long cap) {
  std::set<Perm> seen{perm_identity(degree)};
  std::vector<Perm> frontier{perm_identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> fresh;
    for (const auto& f : frontier) {
      for (const auto& g : gens) {
        Perm h = perm_mul(f, g);
        if (seen.insert(h).second) {
          fresh.push_back(std::move(h));
          if (cap > 0 && static_cast<long long>(seen.size()) > cap)
            return static_cast<long long>(seen.size());
        }
      }
    }
    frontier.swap(fresh);
  }
  return static_cast<long long>(seen.size());
}

inline QuotientWitness emit_witness(const GroupModel& g, const SearchResult& res) {
  QuotientWitness w;
  w.group_name = g.name;
  w.degree = g.degree;
  for (int x : res.handles) w.handle_images.push_back(g.to_perm(x));
  for (int x : res.cones) w.cone_images.push_back(g.to_perm(x));
  std::vector<Perm> all = w.handle_images;
  all.insert(all.end(), w.cone_images.begin(), w.cone_images.end());
  w.target_order = generated_order(all, g.degree, 0);
  return w;
}

}  // namespace detail

/**
 * Deterministic search for a finite quotient with exact cone orders, at most
 * `bound` elements: first abelian groups (invariant-factor products of up to
 * three cyclic factors dividing the cone lcm, order ascending), then the
 * fixed nonabelian catalog, then the remaining big symmetric groups for
 * genus-0 data. Exceptional signatures are rejected up front.
 */
inline QuotientWitness find_good_quotient(const OrbifoldSignature& sig, long long bound = 512) {
  if (exceptional_case(sig))
    throw error(errc::exceptional_input,
                "signature " + signature_name(sig) + " has a cyclic orbifold group");
  if (bound < 1) throw error(errc::invalid_argument, "bound must be positive");

  const auto& orders = sig.cone_orders;
  if (detail::abelian_feasible(orders)) {
    for (const auto& chain : detail::abelian_factor_chains(signature_lcm(sig), bound)) {
      auto g = detail::abelian_model(chain);
      detail::cache_orders(g);
      if (auto res = detail::search_in_model(g, sig.genus, orders))
        return detail::emit_witness(g, *res);
    }
  }
  for (const auto& g : detail::nonabelian_catalog()) {
    if (g.order > bound) continue;
    if (auto res = detail::search_in_model(g, sig.genus, orders))
      return detail::emit_witness(g, *res);
  }
  // Large symmetric groups: genus 0 only (their commutator tables are too
  // big, and the catalog already covers every handle-relator need).
  if (sig.genus == 0) {
    for (int d = 7; d <= 8; ++d) {
      long long fact = 1;
      for (int i = 2; i <= d; ++i) fact *= i;
      if (fact > bound) continue;
      auto g = detail::symmetric_model(d);
      detail::cache_orders(g);
      if (auto res = detail::search_in_model(g, sig.genus, orders))
        return detail::emit_witness(g, *res);
    }
  }
  throw error(errc::not_found_within_bound,
              "no good quotient of order at most " + std::to_string(bound) + " for " +
                  signature_name(sig));
}

struct WitnessReport {
  bool ok = false;
  std::vector<std::string> violations;
};

/**
 * Re-checks a witness against the presentation alone: image shapes, exact
 * cone orders read off cycle structure, every relator word walked to the
 * identity, and the generated subgroup order recomputed by closure. Shares
 * no state with the search.
 */
inline WitnessReport verify_quotient_witness(const OrbifoldSignature& sig,
                                             const QuotientWitness& w, long long bound = 512) {
  WitnessReport report;
  size_t g2 = static_cast<size_t>(2 * sig.genus);
  size_t r = sig.cone_orders.size();
  if (w.handle_images.size() != g2 || w.cone_images.size() != r || w.degree < 1) {
    report.violations.push_back("shape");
    return report;
  }
  auto image = [&](long long idx) -> const Perm& {
    return idx <= static_cast<long long>(g2) ? w.handle_images[static_cast<size_t>(idx - 1)]
                                             : w.cone_images[static_cast<size_t>(idx - 1) - g2];
  };
  for (const auto& p : w.handle_images)
    if (!detail::is_permutation(p, w.degree)) report.violations.push_back("handle-image");
  for (const auto& p : w.cone_images)
    if (!detail::is_permutation(p, w.degree)) report.violations.push_back("cone-image");
  if (!report.violations.empty()) return report;

  for (size_t j = 0; j < r; ++j)
    if (detail::perm_order(w.cone_images[j]) != sig.cone_orders[j])
      report.violations.push_back("cone-order-" + std::to_string(j + 1));

  auto pres = presentation(sig);
  for (size_t i = 0; i < pres.relators.size(); ++i) {
    Perm acc = detail::perm_identity(w.degree);
    for (long long idx : pres.relators[i]) {
      const Perm& p = image(idx < 0 ? -idx : idx);
      acc = detail::perm_mul(acc, idx < 0 ? detail::perm_inverse(p) : p);
    }
    if (!detail::perm_is_identity(acc))
      report.violations.push_back("relator-" + std::to_string(i + 1));
  }

  std::vector<Perm> all = w.handle_images;
  all.insert(all.end(), w.cone_images.begin(), w.cone_images.end());
  long long order = detail::generated_order(all, w.degree, 4 * bound + 4);
  if (order != w.target_order) report.violations.push_back("target-order");
  if (order > bound) report.violations.push_back("bound");

  report.ok = report.violations.empty();
  return report;
}

}  // namespace qed::orb
