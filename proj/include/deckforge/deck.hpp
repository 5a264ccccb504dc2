#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "deckforge/canon.hpp"
#include "deckforge/graph.hpp"

namespace deckforge {

/// (n, ell) with card size n - ell.
struct DeckParams {
  int n = 0;
  int ell = 0;

  int card_size() const { return n - ell; }
  /// n >= 2*ell + 1, the range where acyclicity is deck-determined.
  bool in_main_range() const { return n >= 2 * ell + 1; }
  bool is_excluded_case() const { return n == 5 && ell == 2; }

  bool operator==(const DeckParams&) const = default;
};

/// Multiset of j-vertex cards of an n-vertex graph, keyed by isomorphism class.
class Deck {
 public:
  using Cards = std::map<CanonicalCode, std::uint64_t>;

  /// Validates 1 <= j <= n, positive multiplicities, every code of order j
  /// and total multiplicity C(n, j). Violations throw InvalidCardSize or
  /// InconsistentDeck.
  Deck(int n, int card_size, Cards cards);

  int n() const { return n_; }
  int card_size() const { return card_size_; }
  int ell() const { return n_ - card_size_; }
  DeckParams params() const { return {n_, n_ - card_size_}; }
  const Cards& cards() const { return cards_; }
  std::uint64_t total() const;

  /// Every card is a forest.
  bool is_acyclic() const;

  bool operator==(const Deck&) const = default;

 private:
  int n_;
  int card_size_;
  Cards cards_;
};

Deck compute_deck(const Graph& g, int card_size);

bool decks_equal(const Deck& a, const Deck& b);

/// The (j-1)-deck: each card contributes its own vertex-deleted subcards and
/// the totals are divided by n - j + 1. Inexact division means the input was
/// not the deck of any graph and throws InconsistentDeck.
Deck derive_subdeck(const Deck& d);

/// s(F, G) for the unknown G behind `d`, recovered from card counts.
std::uint64_t count_induced_from_deck(const Deck& d, const Graph& f);

/// Number of vertex subsets S with g[S] isomorphic to f.
std::uint64_t count_induced_direct(const Graph& g, const Graph& f);

std::uint64_t edge_count_from_deck(const Deck& d);

// Text form: a `DECK n=<n> j=<j>` header then `<code> <multiplicity>` lines
// sorted by code, so byte equality coincides with deck equality.
void write_deck(std::ostream& out, const Deck& d);
std::string serialize_deck(const Deck& d);
Deck read_deck(std::istream& in);
Deck parse_deck(const std::string& text);

}  // namespace deckforge
