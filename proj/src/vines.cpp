#include "deckforge/vines.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "deckforge/subsets.hpp"

namespace deckforge {

std::optional<VineKind> classify_vine(const Graph& t) {
  if (t.order() == 0 || !is_tree(t)) return std::nullopt;
  const int d = diameter(t);
  if (d % 2 == 0) return VineKind{VineShape::Vine, d / 2};
  return VineKind{VineShape::Evine, (d - 1) / 2};
}

VertexSet ball(const Graph& g, int v, int j) { return within_distance(g, VertexSet::single(v), j); }

VertexSet eball(const Graph& g, Edge e, int j) {
  return within_distance(g, VertexSet::single(e.u) | VertexSet::single(e.v), j);
}

namespace {

// Vertex sets (start excluded) of induced paths start = p0, p1, ..., p_len
// where no p_i (i >= 1) lies in or is adjacent to `forbidden`.
std::vector<VertexSet> induced_arms(const Graph& g, int start, int len, VertexSet forbidden) {
  std::vector<VertexSet> arms;
  VertexSet blocked_nbrs;
  for (int f : forbidden) blocked_nbrs |= g.neighbors(f);
  std::function<void(int, VertexSet, VertexSet)> grow = [&](int tip, VertexSet body, VertexSet near) {
    // `near` holds neighbors of every path vertex except the tip.
    if (body.size() == len) {
      arms.push_back(body);
      return;
    }
    VertexSet next = g.neighbors(tip) - near - body - forbidden - blocked_nbrs - VertexSet::single(start);
    for (int w : next) grow(w, body | VertexSet::single(w), near | g.neighbors(tip) | VertexSet::single(tip));
  };
  grow(start, VertexSet{}, VertexSet{});
  return arms;
}

bool arms_compatible(const Graph& g, VertexSet a, VertexSet b) {
  if (!(a & b).empty()) return false;
  for (int v : a) {
    if (!(g.neighbors(v) & b).empty()) return false;
  }
  return true;
}

}  // namespace

bool is_j_center(const Graph& g, int v, int j) {
  if (j == 0) return true;
  auto arms = induced_arms(g, v, j, VertexSet{});
  for (std::size_t a = 0; a < arms.size(); ++a) {
    for (std::size_t b = a + 1; b < arms.size(); ++b) {
      if (arms_compatible(g, arms[a], arms[b])) return true;
    }
  }
  return false;
}

VertexSet j_centers(const Graph& g, int j) {
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (is_j_center(g, v, j)) out.insert(v);
  }
  return out;
}

bool is_j_central_edge(const Graph& g, Edge e, int j) {
  if (!g.adjacent(e.u, e.v)) return false;
  if (j == 0) return true;
  auto left = induced_arms(g, e.u, j, VertexSet::single(e.v));
  if (left.empty()) return false;
  auto right = induced_arms(g, e.v, j, VertexSet::single(e.u));
  for (VertexSet a : left) {
    for (VertexSet b : right) {
      if (arms_compatible(g, a, b)) return true;
    }
  }
  return false;
}

std::vector<Edge> j_central_edges(const Graph& g, int j) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (is_j_central_edge(g, e, j)) out.push_back(e);
  }
  return out;
}

bool has_induced_path(const Graph& g, int vertices) {
  if (vertices <= 0) return true;
  if (vertices > g.order()) return false;
  // An induced path on m vertices has an end, and from it an arm of m - 1 edges.
  for (int v = 0; v < g.order(); ++v) {
    if (vertices == 1 || !induced_arms(g, v, vertices - 1, VertexSet{}).empty()) return true;
  }
  return false;
}

Graph maximal_vine_at(const Graph& g, int v, int j) {
  if (!is_j_center(g, v, j)) {
    throw Error(Errc::NotACenter, "vertex " + std::to_string(v) + " is not a " + std::to_string(j) + "-center");
  }
  if (!girth(g).at_least(2 * j + 2)) {
    throw Error(Errc::GirthTooSmall, "maximal j-vines need girth >= 2j+2");
  }
  return induced_subgraph(g, ball(g, v, j));
}

Graph maximal_evine_at(const Graph& g, Edge e, int j) {
  if (!is_j_central_edge(g, e, j)) {
    throw Error(Errc::NotACenter, "edge is not " + std::to_string(j) + "-central");
  }
  if (!girth(g).at_least(2 * j + 3)) {
    throw Error(Errc::GirthTooSmall, "maximal j-evines need girth >= 2j+3");
  }
  return induced_subgraph(g, eball(g, e, j));
}

KValue k_of_graph(const Graph& g, DeckParams params) {
  const int n = g.order();
  const int c = params.card_size();
  if (params.n != n || c < 1) throw Error(Errc::InvalidParameter, "parameters do not match the graph");
  if (g.edge_count() == 0) return KValue::undefined();

  // Diameters of induced trees on exactly c vertices.
  std::vector<bool> card_tree_diam(c + 1, false);
  for_each_subset(n, c, [&](VertexSet s) {
    if (induced_edge_count(g, s) != c - 1) return;
    Graph h = induced_subgraph(g, s);
    if (is_connected(h)) card_tree_diam[diameter(h)] = true;
  });
  auto oversized = [&](int j) {
    for (int d : {2 * j, 2 * j + 1}) {
      if (d <= c && card_tree_diam[d]) return true;
      // Longest path already exceeds c vertices.
      if (d + 1 > c && has_induced_path(g, d + 1)) return true;
    }
    return false;
  };
  int k = -1;
  for (int cand = 0; has_induced_path(g, 2 * cand + 2); ++cand) {
    if (oversized(cand)) break;
    k = cand;
  }
  return k < 0 ? KValue::undefined() : KValue::of(k);
}

KValue k_from_deck(const Deck& d) {
  int max_component_diam = -1;
  int min_card_diam = std::numeric_limits<int>::max();
  bool any_edge = false;
  for (const auto& [code, mult] : d.cards()) {
    const Graph card = code.graph();
    if (!is_forest(card)) throw Error(Errc::NotAcyclicDeck, "card " + code.str() + " has a cycle");
    any_edge = any_edge || card.edge_count() > 0;
    for (VertexSet comp : components(card)) {
      max_component_diam = std::max(max_component_diam, diameter(induced_subgraph(card, comp)));
    }
    if (is_connected(card)) min_card_diam = std::min(min_card_diam, diameter(card));
  }
  if (!any_edge) return KValue::undefined();
  // Need a component of diameter >= 2k+1 and no connected card of diameter <= 2k+1.
  int k = (max_component_diam - 1) / 2;
  if (min_card_diam != std::numeric_limits<int>::max()) k = std::min(k, (min_card_diam - 2) / 2);
  if (min_card_diam < 2) return KValue::undefined();
  return k < 0 ? KValue::undefined() : KValue::of(k);
}

}  // namespace deckforge
