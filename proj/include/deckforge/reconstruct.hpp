#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "deckforge/canon.hpp"
#include "deckforge/deck.hpp"

namespace deckforge {

/// The graph family F that maximal counts are taken over.
class Family {
 public:
  enum class Kind { Vines, Evines, Connected };

  static Family vines(int j) { return Family(Kind::Vines, j); }
  static Family evines(int j) { return Family(Kind::Evines, j); }
  static Family connected() { return Family(Kind::Connected, 0); }

  Kind kind() const { return kind_; }
  int j() const { return j_; }
  bool contains(const Graph& g) const;

  /// "vines:<j>", "evines:<j>" or "connected".
  std::string str() const;
  static Family parse(std::string_view text);

  auto operator<=>(const Family&) const = default;

 private:
  Family(Kind kind, int j);
  Kind kind_;
  int j_;
};

using Boundary = std::map<CanonicalCode, std::uint64_t>;

struct CountingEntry {
  /// s(F, G); absent for members larger than the cards.
  std::optional<std::uint64_t> s_count;
  /// m(F, G), the number of maximal F-subgraphs.
  std::uint64_t m_count = 0;

  bool operator==(const CountingEntry&) const = default;
};

struct CountingTable {
  Family family = Family::connected();
  DeckParams params;
  std::map<CanonicalCode, CountingEntry> entries;

  /// m for a code, 0 when the code never occurs.
  std::uint64_t m(const CanonicalCode& code) const;
  std::uint64_t total_m() const;

  bool operator==(const CountingTable&) const = default;
};

/// Zero for every card of `d` that lies in the family.
Boundary zero_boundary(const Deck& d, const Family& family);

/// Solves s(F) = sum over H of s(F, H) m(H) for m, by decreasing order of F.
/// `boundary` gives m for members with at least n - ell vertices; every such
/// member seen as a card must be present or MissingBoundary is thrown.
/// A negative solution means the unique-maximal precondition failed and
/// throws InconsistentInput.
CountingTable solve_maximal_counts(const Deck& d, const Family& family, const Boundary& boundary);

/// Number of induced F-subgraphs of g, keyed by class, over family members.
std::map<CanonicalCode, std::uint64_t> family_subgraph_counts(const Graph& g, const Family& family);

/// Component multiset, or nullopt when two or more cards are connected
/// (then some component is larger than the cards). Needs n > 2 ell.
std::optional<std::map<CanonicalCode, std::uint64_t>> components_from_deck(const Deck& d);

using DegreeList = std::vector<int>;

/// Degree list (descending) from an acyclic deck with n >= 2 ell + 1.
/// Throws ExcludedCase for (n, ell) = (5, 2).
DegreeList degree_list_from_deck(const Deck& d);

/// Number of j-centers shared by every reconstruction, valid for j <= k and
/// for j = k + 1 when no card has diameter 2k + 2.
std::uint64_t j_center_count_from_deck(const Deck& d, int j);

/// Number of j-central edges, valid for j <= k.
std::uint64_t j_central_edge_count_from_deck(const Deck& d, int j);

// Text form: `TABLE n=<n> j=<card size> family=<family>` then
// `<code> <s or -> <m>` lines sorted by code.
void write_table(std::ostream& out, const CountingTable& t);
std::string serialize_table(const CountingTable& t);
CountingTable read_table(std::istream& in);
CountingTable parse_table(const std::string& text);

}  // namespace deckforge
