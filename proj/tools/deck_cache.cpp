#include "deck_cache.hpp"

#include <fstream>
#include <sstream>

#include "deckforge/error.hpp"

namespace deckforge::cli {

namespace fs = std::filesystem;

DeckCache::DeckCache(std::optional<fs::path> dir) : dir_(std::move(dir)) {
  if (dir_) fs::create_directories(*dir_);
}

fs::path DeckCache::entry_path(const CanonicalCode& code, int card_size) const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string name;
  for (unsigned char ch : code.str()) {
    name += kHex[ch >> 4];
    name += kHex[ch & 15];
  }
  name += "-j" + std::to_string(card_size) + ".deck";
  return dir_.value_or(fs::path{}) / name;
}

Deck DeckCache::deck(const Graph& g, int card_size) {
  if (!dir_) return compute_deck(g, card_size);
  const CanonicalCode code = canonical_form(g);
  const fs::path path = entry_path(code, card_size);

  if (std::ifstream in{path}; in) {
    std::stringstream text;
    text << in.rdbuf();
    try {
      Deck cached = parse_deck(text.str());
      if (cached.n() == g.order() && cached.card_size() == card_size) {
        ++hits_;
        return cached;
      }
    } catch (const Error&) {
    }
    ++repaired_;
  } else {
    ++misses_;
  }

  Deck fresh = compute_deck(code.graph(), card_size);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out{tmp, std::ios::trunc};
    write_deck(out, fresh);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
  return fresh;
}

}  // namespace deckforge::cli
