#pragma once

// Graph families for property tests. Unlike oracles.hpp these helpers use
// canonical_form to deduplicate; its class partition is checked separately.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "deckforge/canon.hpp"
#include "deckforge/vines.hpp"
#include "oracles.hpp"

namespace fixtures {

using deckforge::CanonicalCode;
using deckforge::Graph;
using deckforge::VertexSet;

/// One representative of every forest on n vertices.
inline std::vector<Graph> all_forests(int n) {
  std::map<CanonicalCode, Graph> level{{deckforge::canonical_form(Graph(1)), Graph(1)}};
  for (int m = 1; m < n; ++m) {
    std::map<CanonicalCode, Graph> next;
    for (const auto& [code, g] : level) {
      for (int attach = -1; attach < m; ++attach) {
        Graph h(m + 1);
        for (const auto& e : g.edges()) h.add_edge(e.u, e.v);
        if (attach >= 0) h.add_edge(attach, m);
        next.try_emplace(deckforge::canonical_form(h), h);
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, g] : level) out.push_back(g);
  return out;
}

inline std::vector<Graph> all_trees(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_forests(n)) {
    if (deckforge::is_tree(g)) out.push_back(std::move(g));
  }
  return out;
}

/// Random graph on n vertices with girth >= min_girth and at least one cycle:
/// a cycle of length in [min_girth, n] with random pendant forest growth and
/// occasionally a second cycle built from leftover vertices.
inline Graph random_long_girth_graph(int n, int min_girth, std::mt19937_64& rng) {
  const int len = min_girth + static_cast<int>(rng() % (n - min_girth + 1));
  Graph g(n);
  for (int i = 0; i < len; ++i) g.add_edge(i, (i + 1) % len);
  int v = len;
  if (n - v >= min_girth && rng() % 2 == 0) {
    const int len2 = min_girth + static_cast<int>(rng() % (n - v - min_girth + 1));
    for (int i = 0; i < len2; ++i) g.add_edge(v + i, v + (i + 1) % len2);
    v += len2;
  }
  for (; v < n; ++v) {
    if (rng() % 5 == 0) continue;
    g.add_edge(v, static_cast<int>(rng() % v));
  }
  return deckforge::relabel(g, oracle::random_permutation(n, rng));
}

/// Maximal induced subgraphs of g satisfying pred, counted by class.
inline std::map<CanonicalCode, std::uint64_t> brute_maximal_counts(const Graph& g,
                                                                   const std::function<bool(VertexSet)>& pred) {
  std::map<CanonicalCode, std::uint64_t> out;
  for (VertexSet s : oracle::maximal_only(oracle::subsets_where(g, pred))) {
    ++out[deckforge::canonical_form(deckforge::induced_subgraph(g, s))];
  }
  return out;
}

/// k from its definition: largest j with an induced j-evine while every
/// induced i-vine and i-evine (i <= j) has fewer than c vertices.
inline deckforge::KValue brute_k(const Graph& g, int c) {
  const int n = g.order();
  std::vector<int> max_size(2 * n + 2, 0);  // indexed by diameter
  for (VertexSet s : oracle::subsets_where(g, [&](VertexSet s) { return oracle::brute_is_tree(g, s); })) {
    int d = oracle::brute_diameter(g, s);
    max_size[d] = std::max(max_size[d], s.size());
  }
  int k = -1;
  for (int cand = 0; 2 * cand + 1 < static_cast<int>(max_size.size()); ++cand) {
    if (max_size[2 * cand + 1] == 0) break;
    bool ok = true;
    for (int j = 0; j <= cand; ++j) ok = ok && max_size[2 * j] < c && max_size[2 * j + 1] < c;
    if (!ok) break;
    k = cand;
  }
  return k < 0 ? deckforge::KValue::undefined() : deckforge::KValue::of(k);
}

}  // namespace fixtures
