#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "deckforge/error.hpp"

namespace deckforge {

inline constexpr int kMaxVertices = 64;

/// Bitmask over vertex labels 0..63.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

struct Edge {
  int u = 0;
  int v = 0;
  constexpr auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on at most 64 vertices; one 64-bit adjacency row
/// per vertex. Rows beyond `order()` are always zero.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  std::uint64_t row(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int edge_count() const;
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

/// Shortest-cycle length, or the distinguished Acyclic value.
class Girth {
 public:
  static constexpr Girth acyclic() { return Girth(); }
  static Girth of_length(int length);

  constexpr bool is_acyclic() const { return length_ == 0; }
  int length() const;
  /// True when every cycle has at least `bound` vertices (always true when acyclic).
  constexpr bool at_least(int bound) const { return is_acyclic() || length_ >= bound; }
  constexpr bool operator==(const Girth&) const = default;

 private:
  constexpr Girth() = default;
  int length_ = 0;
};

// g restricted to s, relabeled 0..|s|-1 in ascending order of original labels.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// perm[old] = new label.
Graph relabel(const Graph& g, std::span<const int> perm);

Graph disjoint_union(const Graph& a, const Graph& b);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, int source);

/// Vertices within distance `radius` of any vertex in `sources`.
VertexSet within_distance(const Graph& g, VertexSet sources, int radius);

/// Largest distance from v to a vertex of its own component.
int eccentricity(const Graph& g, int v);

int diameter(const Graph& g);
int radius(const Graph& g);
VertexSet centers(const Graph& g);

Girth girth(const Graph& g);

/// Components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// Sorted descending so equal sequences compare as multisets.
std::vector<int> degree_sequence(const Graph& g);

// Standard constructions.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
/// Spider with the given leg lengths; vertex 0 is the root.
Graph spider_graph(std::span<const int> legs);
Graph spider_graph(std::initializer_list<int> legs);

}  // namespace deckforge
