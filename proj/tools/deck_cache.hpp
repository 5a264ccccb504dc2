#pragma once

#include <filesystem>
#include <optional>

#include "deckforge/deck.hpp"

namespace deckforge::cli {

/// Memo of compute_deck on disk: one file per (canonical code, card size)
/// holding the deck serialization. Entries that fail to parse or describe a
/// different deck shape are recomputed and rewritten.
class DeckCache {
 public:
  /// No directory means every lookup computes.
  explicit DeckCache(std::optional<std::filesystem::path> dir);

  Deck deck(const Graph& g, int card_size);

  std::filesystem::path entry_path(const CanonicalCode& code, int card_size) const;

  int hits() const { return hits_; }
  int misses() const { return misses_; }
  int repaired() const { return repaired_; }

 private:
  std::optional<std::filesystem::path> dir_;
  int hits_ = 0;
  int misses_ = 0;
  int repaired_ = 0;
};

}  // namespace deckforge::cli
