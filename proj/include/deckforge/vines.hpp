#pragma once

#include <optional>
#include <vector>

#include "deckforge/deck.hpp"
#include "deckforge/graph.hpp"

namespace deckforge {

enum class VineShape { Vine, Evine };

/// A j-vine is a tree of diameter 2j; a j-evine a tree of diameter 2j + 1.
struct VineKind {
  VineShape shape = VineShape::Vine;
  int j = 0;

  int diameter() const { return shape == VineShape::Vine ? 2 * j : 2 * j + 1; }
  bool operator==(const VineKind&) const = default;
};

/// Vine(d/2) or Evine((d-1)/2) for a tree of diameter d; nullopt otherwise.
std::optional<VineKind> classify_vine(const Graph& t);

/// Vertices within distance j of v.
VertexSet ball(const Graph& g, int v, int j);
/// Vertices within distance j of either endpoint of e.
VertexSet eball(const Graph& g, Edge e, int j);

/// True when some induced j-vine has center v, i.e. v is the middle vertex
/// of an induced path on 2j + 1 vertices.
bool is_j_center(const Graph& g, int v, int j);
VertexSet j_centers(const Graph& g, int j);

/// True when e is the middle edge of an induced path on 2j + 2 vertices.
bool is_j_central_edge(const Graph& g, Edge e, int j);
std::vector<Edge> j_central_edges(const Graph& g, int j);

/// True when g has an induced path on `vertices` vertices.
bool has_induced_path(const Graph& g, int vertices);

/// The j-ball at a j-center, which is the unique maximal j-vine containing
/// any j-vine centered there once girth >= 2j + 2.
/// Throws NotACenter, or GirthTooSmall when uniqueness is not guaranteed.
Graph maximal_vine_at(const Graph& g, int v, int j);

/// Edge version: needs a j-central edge and girth >= 2j + 3.
Graph maximal_evine_at(const Graph& g, Edge e, int j);

/// The deck parameter k, or Undefined.
class KValue {
 public:
  static KValue undefined() { return KValue(); }
  static KValue of(int k) {
    KValue v;
    v.value_ = k;
    return v;
  }

  bool is_defined() const { return value_.has_value(); }
  int value() const {
    if (!value_) throw Error(Errc::OutOfValidityRange, "k is undefined");
    return *value_;
  }
  bool operator==(const KValue&) const = default;

 private:
  KValue() = default;
  std::optional<int> value_;
};

/// Largest k such that g has an induced k-evine and, for every j <= k, every
/// induced j-vine and j-evine has fewer than n - ell vertices.
///
/// Oversized vines are detected through cards: an induced j-vine with more
/// than n - ell vertices can be trimmed leaf by leaf (off a fixed longest
/// path) to exactly n - ell vertices unless its longest path alone is already
/// too long, so it suffices to inspect (n - ell)-subsets plus induced path
/// lengths.
KValue k_of_graph(const Graph& g, DeckParams params);

/// The same parameter computed from an acyclic deck. Only whole cards can be
/// vines with n - ell vertices, so this reduces to card and component
/// diameters. Throws NotAcyclicDeck when some card has a cycle.
KValue k_from_deck(const Deck& d);

}  // namespace deckforge
