#pragma once

// Test-only reference implementations. They work on a plain adjacency
// matrix with nested loops and full subset enumeration so they share no code
// path with the library's bitset search.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "contractdom/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const contractdom::Graph& g) {
  Matrix a(g.order(), std::vector<bool>(g.order(), false));
  for (auto e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

inline std::vector<int> members(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1U) out.push_back(v);
  return out;
}

inline bool dominates(const Matrix& a, std::uint64_t d) {
  const int n = static_cast<int>(a.size());
  for (int v = 0; v < n; ++v) {
    if ((d >> v) & 1U) continue;
    bool hit = false;
    for (int u = 0; u < n && !hit; ++u) hit = ((d >> u) & 1U) && a[u][v];
    if (!hit) return false;
  }
  return true;
}

inline bool stable(const Matrix& a, std::uint64_t s) {
  auto vs = members(s, static_cast<int>(a.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (a[vs[i]][vs[j]]) return false;
  return true;
}

/// All minimum dominating sets by scanning every subset in size order.
inline std::vector<std::uint64_t> all_min_ds(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  for (int size = 0; size <= n; ++size) {
    std::vector<std::uint64_t> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (__builtin_popcountll(mask) == size && dominates(a, mask)) found.push_back(mask);
    }
    if (!found.empty()) return found;
  }
  return {};
}

inline int gamma(const Matrix& a) { return __builtin_popcountll(all_min_ds(a).front()); }

/// G/uv by definition: drop v, give u the union of both neighbourhoods.
inline Matrix contract(const Matrix& a, int u, int v) {
  if (u > v) std::swap(u, v);
  const int n = static_cast<int>(a.size());
  std::vector<int> keep;
  for (int x = 0; x < n; ++x)
    if (x != v) keep.push_back(x);
  Matrix out(n - 1, std::vector<bool>(n - 1, false));
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) {
      if (i == j) continue;
      int x = keep[i];
      int y = keep[j];
      bool adj = a[x][y];
      if (x == u) adj = adj || a[v][y];
      if (y == u) adj = adj || a[x][v];
      out[i][j] = adj;
    }
  }
  return out;
}

/// Answer to the contraction question straight from the definition.
inline bool contraction_lowers_gamma(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  const int g = gamma(a);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (a[u][v] && gamma(contract(a, u, v)) < g) return true;
  return false;
}

/// Does the subset induce one path on `first` vertices plus `twos` disjoint
/// edges, all pairwise anticomplete? Decided from component sizes and edges.
inline bool induces_p3_plus_p2s(const Matrix& a, const std::vector<int>& s, int twos) {
  if (static_cast<int>(s.size()) != 3 + 2 * twos) return false;
  const int m = static_cast<int>(s.size());
  std::vector<int> comp(m, -1);
  std::vector<int> sizes;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    std::vector<int> stack{i};
    comp[i] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++sizes[id];
      for (int y = 0; y < m; ++y) {
        if (comp[y] < 0 && a[s[x]][s[y]]) {
          comp[y] = id;
          stack.push_back(y);
        }
      }
    }
  }
  int edges = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) edges += a[s[i]][s[j]];
  std::sort(sizes.begin(), sizes.end());
  std::vector<int> want(twos, 2);
  want.push_back(3);
  // A 3-vertex component with two edges is P3; 2-vertex components are edges.
  return sizes == want && edges == 2 + twos;
}

/// Blind scan over all (3 + 2·twos)-subsets.
inline bool contains_p3_plus_p2s(const Matrix& a, int twos) {
  const int n = static_cast<int>(a.size());
  const int need = 3 + 2 * twos;
  if (need > n) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) == need && induces_p3_plus_p2s(a, members(mask, n), twos)) return true;
  }
  return false;
}

inline bool connected(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++count;
    for (int y = 0; y < n; ++y)
      if (a[x][y] && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  return count == n;
}

/// BFS hop distance, -1 when unreachable.
inline int distance(const Matrix& a, int s, int t) {
  const int n = static_cast<int>(a.size());
  std::vector<int> d(n, -1);
  std::vector<int> queue{s};
  d[s] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (int y = 0; y < n; ++y)
      if (a[x][y] && d[y] < 0) {
        d[y] = d[x] + 1;
        queue.push_back(y);
      }
  }
  return d[t];
}

/// Number of connected labelled graphs on n vertices by the standard
/// recurrence c(n) = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c(k) 2^C(n-k,2).
inline long long connected_labelled_count(int n) {
  std::vector<long long> c(n + 1, 0);
  auto binom = [](int a, int b) {
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  auto pow2 = [](int e) { return 1LL << e; };
  for (int m = 1; m <= n; ++m) {
    long long total = pow2(m * (m - 1) / 2);
    for (int k = 1; k < m; ++k) total -= binom(m - 1, k - 1) * c[k] * pow2((m - k) * (m - k - 1) / 2);
    c[m] = total;
  }
  return c[n];
}

/// Random connected graph (test-local generator, independent of the
/// library's sampler): a random spanning tree plus G(n, p) extras.
inline contractdom::Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return contractdom::Graph::from_edge_list(n, edges);
}

}  // namespace oracle
