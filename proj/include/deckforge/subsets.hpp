#pragma once

#include <cstdint>
#include <type_traits>

#include "deckforge/graph.hpp"

namespace deckforge {

/// Calls fn(VertexSet) for every k-subset of {0..n-1} in increasing bit order.
/// Stops early when fn returns false (for callables returning bool).
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    if constexpr (std::is_same_v<decltype(fn(VertexSet{})), bool>) {
      (void)fn(VertexSet{});
    } else {
      fn(VertexSet{});
    }
    return;
  }
  const std::uint64_t limit = n >= 64 ? 0 : std::uint64_t{1} << n;
  std::uint64_t s = (k >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    if constexpr (std::is_same_v<decltype(fn(VertexSet{})), bool>) {
      if (!fn(VertexSet(s))) return;
    } else {
      fn(VertexSet(s));
    }
    // Gosper's hack: next word with the same popcount.
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0) return;
    s = (((r ^ s) >> 2) / c) | r;
    if (limit != 0 && s >= limit) return;
  }
}

/// Edge count of g[s] without building the subgraph.
inline int induced_edge_count(const Graph& g, VertexSet s) {
  int twice = 0;
  for (int v : s) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

}  // namespace deckforge
