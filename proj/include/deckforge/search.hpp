#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "deckforge/canon.hpp"
#include "deckforge/deck.hpp"

namespace deckforge {

/// Largest orders the exhaustive enumerations will attempt. Asking for more
/// throws BudgetExceeded rather than truncating.
struct SearchBudget {
  int max_tree_vertices = 13;
  int max_forest_vertices = 11;
  int max_cyclic_vertices = 11;
  int max_graph_vertices = 8;

  /// Same cap for every family (all-graphs stays at most its default).
  static SearchBudget uniform(int vertices);
};

struct SearchOptions {
  SearchBudget budget;
  int jobs = 1;
  /// Compare degree lists before decks where the degree list is known to be
  /// deck-determined.
  bool degree_prefilter = true;
};

/// One representative per isomorphism class, sorted by code.
std::vector<CanonicalCode> enumerate_trees(int n, const SearchBudget& budget = {});
std::vector<CanonicalCode> enumerate_forests(int n, const SearchBudget& budget = {});
std::vector<CanonicalCode> enumerate_graphs(int n, const SearchBudget& budget = {});

/// Graphs with a cycle, girth >= n - ell + 1 and at most max_edges edges
/// (default n - 1). Every such graph contains a shortest cycle of some length
/// g in [n - ell + 1, n]; starting from each C_g the generator adds one edge
/// at a time while the girth stays large, deduplicating every level.
std::vector<CanonicalCode> enumerate_cyclic_candidates(DeckParams params, const SearchBudget& budget = {},
                                                       int max_edges = -1);

struct SearchReport {
  std::string kind;
  int n = 0;
  int card_size = 0;
  /// Ordered (stage, count) pairs.
  std::vector<std::pair<std::string, std::uint64_t>> stages;
  /// Sorted, each pair ordered (first < second) or (acyclic, cyclic).
  std::vector<std::pair<CanonicalCode, CanonicalCode>> witnesses;
  double seconds = 0;
};

/// Pairs (forest, cyclic candidate) with equal (n - ell)-decks.
SearchReport find_ambiguous(DeckParams params, const SearchOptions& options = {});

/// Unordered pairs of non-isomorphic n-vertex trees with equal j-decks.
SearchReport find_equal_deck_tree_pairs(int n, int card_size, const SearchOptions& options = {});

/// Text form of a report. Wall time is included only when asked, so default
/// output is reproducible byte for byte.
void write_report(std::ostream& out, const SearchReport& r, bool with_time = false);

struct NamedConstruction {
  std::string name;
  int ell = 0;
  /// Card size at which the construction is stated.
  int card_size = 0;
  /// One graph, or a pair claimed to share the deck at card_size.
  std::vector<Graph> graphs;
};

std::vector<std::string> counterexample_names();

/// spinoza_west, nydl, split_paths, theta_isolated, chorded_cycle or
/// two_cycles. Throws InvalidParameter for unknown names or unsupported ell.
NamedConstruction named_counterexample(const std::string& name, int ell);

enum class DeckClass { AllAcyclic, AllNonacyclic, Ambiguous, NoReconstruction };

const char* to_string(DeckClass c);

struct Classification {
  DeckClass verdict = DeckClass::NoReconstruction;
  std::vector<CanonicalCode> acyclic;
  std::vector<CanonicalCode> cyclic;
};

/// Every n-vertex reconstruction of `d`, split by acyclicity. Cyclic
/// reconstructions of an acyclic deck come from the long-girth candidates;
/// otherwise all graphs are enumerated, within the all-graphs budget.
Classification classify_deck(const Deck& d, const SearchOptions& options = {});

}  // namespace deckforge
