#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// into canonical labeling, deck construction or the solvers under test, except
// where noted (the graph container and graph6 encoder are shared plumbing).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "deckforge/graph.hpp"
#include "deckforge/graph6.hpp"

namespace oracle {

using deckforge::Graph;
using deckforge::VertexSet;

inline Graph chair() { return Graph(5, {{0, 2}, {1, 2}, {2, 3}, {3, 4}}); }
inline Graph c4_plus_k1() { return deckforge::disjoint_union(deckforge::cycle_graph(4), Graph(1)); }

/// Minimum graph6 string over all n! relabelings.
inline std::string min_relabeling_key(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key = deckforge::to_graph6(deckforge::relabel(g, perm));
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Floyd-Warshall distances; large value for unreachable pairs.
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v)) d[u][v] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline int brute_eccentricity(const Graph& g, int v) {
  auto d = all_pairs(g);
  int e = 0;
  for (int u = 0; u < g.order(); ++u)
    if (d[v][u] < (1 << 20)) e = std::max(e, d[v][u]);
  return e;
}

inline bool brute_connected(const Graph& g, VertexSet s) {
  if (s.empty()) return false;
  VertexSet seen = VertexSet::single(s.first());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v : seen) {
      VertexSet add = (g.neighbors(v) & s) - seen;
      if (!add.empty()) {
        seen |= add;
        grew = true;
      }
    }
  }
  return seen == s;
}

inline int brute_induced_edges(const Graph& g, VertexSet s) {
  int e = 0;
  for (int u : s)
    for (int v : s)
      if (u < v && g.adjacent(u, v)) ++e;
  return e;
}

/// Diameter of the connected induced subgraph g[s] computed from all-pairs
/// distances inside s.
inline int brute_diameter(const Graph& g, VertexSet s) {
  Graph h = deckforge::induced_subgraph(g, s);
  auto d = all_pairs(h);
  int best = 0;
  for (auto& row : d)
    for (int x : row) best = std::max(best, x);
  return best;
}

/// Tree test on g[s]: connected with |s| - 1 edges.
inline bool brute_is_tree(const Graph& g, VertexSet s) {
  return brute_connected(g, s) && brute_induced_edges(g, s) == s.size() - 1;
}

/// Center(s) of the tree g[s], by all-pairs eccentricity.
inline VertexSet brute_tree_centers(const Graph& g, VertexSet s) {
  std::vector<int> verts = s.to_vector();
  Graph h = deckforge::induced_subgraph(g, s);
  auto d = all_pairs(h);
  int best = 1 << 20;
  std::vector<int> ecc(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    ecc[i] = *std::max_element(d[i].begin(), d[i].end());
    best = std::min(best, ecc[i]);
  }
  VertexSet out;
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (ecc[i] == best) out.insert(verts[i]);
  return out;
}

/// All subsets of V(g) (as bitmasks) satisfying pred.
inline std::vector<VertexSet> subsets_where(const Graph& g, const std::function<bool(VertexSet)>& pred) {
  std::vector<VertexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t m = 1; m < limit; ++m) {
    if (pred(VertexSet(m))) out.push_back(VertexSet(m));
  }
  return out;
}

/// Subsets of `members` not strictly contained in another member.
inline std::vector<VertexSet> maximal_only(const std::vector<VertexSet>& members) {
  std::vector<VertexSet> out;
  for (VertexSet a : members) {
    bool dominated = false;
    for (VertexSet b : members) {
      if (a != b && a.is_subset_of(b)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(a);
  }
  return out;
}

/// Free-tree counts via Otter's formula from rooted-tree counts (Euler
/// transform recurrence). Index = number of vertices.
inline std::vector<std::uint64_t> free_tree_counts(int max_n) {
  std::vector<std::uint64_t> rooted(max_n + 1, 0);
  if (max_n >= 1) rooted[1] = 1;
  for (int n = 1; n < max_n; ++n) {
    // rooted[n+1] = (1/n) * sum_{k=1..n} (sum_{d|k} d*rooted[d]) * rooted[n-k+1]
    std::uint64_t total = 0;
    for (int k = 1; k <= n; ++k) {
      std::uint64_t s = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) s += static_cast<std::uint64_t>(d) * rooted[d];
      total += s * rooted[n - k + 1];
    }
    rooted[n + 1] = total / n;
  }
  std::vector<std::uint64_t> free(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n) {
    std::int64_t pairs = 0;
    for (int i = 1; i < n; ++i) pairs += static_cast<std::int64_t>(rooted[i] * rooted[n - i]);
    if (n % 2 == 0) pairs -= static_cast<std::int64_t>(rooted[n / 2]);
    free[n] = rooted[n] - static_cast<std::uint64_t>(pairs / 2);
  }
  return free;
}

/// Forest counts as the Euler transform of the free-tree counts.
inline std::vector<std::uint64_t> forest_counts(int max_n) {
  auto t = free_tree_counts(max_n);
  std::vector<std::uint64_t> f(max_n + 1, 0);
  f[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    std::uint64_t total = 0;
    for (int k = 1; k <= n; ++k) {
      std::uint64_t s = 0;
      for (int d = 1; d <= k; ++d)
        if (k % d == 0) s += static_cast<std::uint64_t>(d) * t[d];
      total += s * f[n - k];
    }
    f[n] = total / n;
  }
  return f;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Every labeled graph on n vertices (n <= 6 keeps this at 2^15).
inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((m >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
    out.push_back(g);
  }
  return out;
}

}  // namespace oracle
