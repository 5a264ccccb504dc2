#include "deckforge/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace deckforge {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(Errc::InvalidParameter, "vertex count " + std::to_string(n) + " outside 0..64");
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw Error(Errc::InvalidVertexSet, "vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::InvalidParameter, "self loop at " + std::to_string(u));
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~(std::uint64_t{1} << v);
  rows_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : VertexSet(rows_[u] >> u >> 1 << 1 << u)) out.push_back({u, v});
  }
  return out;
}

Girth Girth::of_length(int length) {
  if (length < 3) throw Error(Errc::InvalidParameter, "girth below 3");
  Girth g;
  g.length_ = length;
  return g;
}

int Girth::length() const {
  if (is_acyclic()) throw Error(Errc::InvalidParameter, "acyclic graph has no girth length");
  return length_;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty() || !s.is_subset_of(g.vertices())) {
    throw Error(Errc::InvalidVertexSet, "vertex set empty or outside the graph");
  }
  std::array<int, kMaxVertices> index{};
  int next = 0;
  for (int v : s) index[v] = next++;
  Graph h(next);
  for (int u : s) {
    for (int v : g.neighbors(u) & s) {
      if (u < v) h.add_edge(index[u], index[v]);
    }
  }
  return h;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  Graph h(g.order());
  for (const Edge& e : g.edges()) h.add_edge(perm[e.u], perm[e.v]);
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.order() + b.order());
  for (const Edge& e : a.edges()) h.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) h.add_edge(e.u + a.order(), e.v + a.order());
  return h;
}

std::vector<int> distances_from(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  int d = 0;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) {
      dist[v] = d;
      next |= g.neighbors(v);
    }
    frontier = next - seen;
    seen |= frontier;
    ++d;
  }
  return dist;
}

VertexSet within_distance(const Graph& g, VertexSet sources, int radius) {
  VertexSet seen = sources;
  VertexSet frontier = sources;
  for (int d = 0; d < radius && !frontier.empty(); ++d) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= frontier;
  }
  return seen;
}

int eccentricity(const Graph& g, int v) {
  auto dist = distances_from(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

namespace {

std::vector<int> all_eccentricities(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::NotConnected, "metric defined on connected graphs only");
  std::vector<int> ecc(g.order());
  for (int v = 0; v < g.order(); ++v) ecc[v] = eccentricity(g, v);
  return ecc;
}

}  // namespace

int diameter(const Graph& g) {
  auto ecc = all_eccentricities(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

int radius(const Graph& g) {
  auto ecc = all_eccentricities(g);
  return *std::min_element(ecc.begin(), ecc.end());
}

VertexSet centers(const Graph& g) {
  auto ecc = all_eccentricities(g);
  int r = *std::min_element(ecc.begin(), ecc.end());
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (ecc[v] == r) out.insert(v);
  }
  return out;
}

Girth girth(const Graph& g) {
  // BFS from every root; a non-tree edge (u, w) closes a walk of length
  // dist[u] + dist[w] + 1, and the minimum over roots is the shortest cycle.
  int best = std::numeric_limits<int>::max();
  const int n = g.order();
  std::vector<int> dist(n), parent(n), queue(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    dist[root] = 0;
    parent[root] = -1;
    queue[tail++] = root;
    while (head < tail) {
      int u = queue[head++];
      if (2 * dist[u] + 1 >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? Girth::acyclic() : Girth::of_length(best);
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = within_distance(g, VertexSet::single(left.first()), g.order());
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return within_distance(g, VertexSet::single(0), g.order()) == g.vertices();
}

bool is_forest(const Graph& g) {
  return g.edge_count() == g.order() - static_cast<int>(components(g).size());
}

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() == g.order() - 1; }

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> seq(g.order());
  for (int v = 0; v < g.order(); ++v) seq[v] = g.degree(v);
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(Errc::InvalidParameter, "cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph spider_graph(std::span<const int> legs) {
  int n = 1;
  for (int len : legs) {
    if (len < 1) throw Error(Errc::InvalidParameter, "spider legs have positive length");
    n += len;
  }
  Graph g(n);
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

Graph spider_graph(std::initializer_list<int> legs) {
  return spider_graph(std::span<const int>(legs.begin(), legs.size()));
}

}  // namespace deckforge
