#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "deckforge/deck.hpp"
#include "deckforge/graph.hpp"

namespace deckforge {

/// Vertices of degree at least 3. Throws NotATree.
VertexSet branch_vertices(const Graph& t);

/// Each leg as a vertex sequence from its leaf to the nearest branch vertex,
/// ordered by leaf label. Throws NotATree, or IsAPath for a path.
std::vector<std::vector<int>> legs(const Graph& t);

struct SpiderShape {
  int root = 0;
  /// Leg lengths, longest first.
  std::vector<int> legs;

  bool operator==(const SpiderShape&) const = default;
};

/// Shape of a tree with at most one branch vertex, nullopt otherwise.
/// A path is rooted at its smallest-labeled center.
std::optional<SpiderShape> spider_shape(const Graph& t);

struct SpiderlyWitness {
  int root = 0;
  VertexSet spider;
};

/// A witness spider whose outside vertices all lie within distance
/// (n - ell - 2) / 2 of its root, or nullopt when none exists.
std::optional<SpiderlyWitness> ell_spiderly_witness(const Graph& t, DeckParams params);
bool is_ell_spiderly(const Graph& t, DeckParams params);

/// Paths with exactly n - ell vertices in a forest, counted by endpoints.
std::uint64_t full_paths_count(const Graph& t, DeckParams params);

struct MarkingReport {
  int j = 0;
  int ell = 0;
  VertexSet card;
  int z = 0;
  VertexSet y;
  int d_c = 0;
  /// (x, x') for each marking j-center x, ordered by x.
  std::vector<std::pair<int, int>> marks;
  /// Markers for which no vertex at distance j extends the z,x-path.
  VertexSet unmarked_centers;
  int center_count = 0;

  int bound() const { return 1 + d_c + ell; }
  bool bound_holds() const { return center_count <= bound(); }
  bool at_bound() const { return center_count == bound(); }
  bool injective = true;
  bool marks_outside_card = true;
  bool all_outside_marked = false;
  bool is_tree = false;
};

/// The marking process for a connected card of radius j + 1 inside forest f,
/// centered at the smallest-labeled card center. Throws OutOfValidityRange
/// for j < 1, BadCard when the card is disconnected or has the wrong radius,
/// and NotATree when f has a cycle.
MarkingReport run_marking(const Graph& f, VertexSet card, int j);

/// One report per card center.
std::vector<MarkingReport> run_marking_all_centers(const Graph& f, VertexSet card, int j);

}  // namespace deckforge
