#include "deckforge/deck.hpp"

#include <regex>
#include <sstream>

#include "deckforge/graph6.hpp"
#include "deckforge/subsets.hpp"

namespace deckforge {

Deck::Deck(int n, int card_size, Cards cards) : n_(n), card_size_(card_size), cards_(std::move(cards)) {
  if (n < 1 || n > kMaxVertices || card_size < 1 || card_size > n) {
    throw Error(Errc::InvalidCardSize,
                "card size " + std::to_string(card_size) + " invalid for n=" + std::to_string(n));
  }
  std::uint64_t sum = 0;
  for (const auto& [code, mult] : cards_) {
    if (mult == 0) throw Error(Errc::InconsistentDeck, "zero multiplicity for " + code.str());
    if (code.order() != card_size) {
      throw Error(Errc::InconsistentDeck, "card " + code.str() + " does not have " +
                                              std::to_string(card_size) + " vertices");
    }
    sum = checked_add(sum, mult);
  }
  if (sum != binomial(n, card_size)) {
    throw Error(Errc::InconsistentDeck, "total multiplicity " + std::to_string(sum) + " != C(" +
                                            std::to_string(n) + "," + std::to_string(card_size) + ")");
  }
}

std::uint64_t Deck::total() const {
  std::uint64_t sum = 0;
  for (const auto& [code, mult] : cards_) sum = checked_add(sum, mult);
  return sum;
}

bool Deck::is_acyclic() const {
  for (const auto& [code, mult] : cards_) {
    if (!is_forest(code.graph())) return false;
  }
  return true;
}

Deck compute_deck(const Graph& g, int card_size) {
  const int n = g.order();
  if (card_size < 1 || card_size > n) {
    throw Error(Errc::InvalidCardSize,
                "card size " + std::to_string(card_size) + " invalid for n=" + std::to_string(n));
  }
  Deck::Cards cards;
  for_each_subset(n, card_size, [&](VertexSet s) { ++cards[canonical_form(induced_subgraph(g, s))]; });
  return Deck(n, card_size, std::move(cards));
}

bool decks_equal(const Deck& a, const Deck& b) { return a == b; }

Deck derive_subdeck(const Deck& d) {
  const int j = d.card_size();
  if (j < 2) throw Error(Errc::InvalidCardSize, "cannot derive below card size 1");
  std::map<CanonicalCode, std::uint64_t> raw;
  for (const auto& [code, mult] : d.cards()) {
    const Graph card = code.graph();
    for (int v = 0; v < j; ++v) {
      CanonicalCode sub = canonical_form(induced_subgraph(card, card.vertices() - VertexSet::single(v)));
      raw[sub] = checked_add(raw[sub], mult);
    }
  }
  const auto divisor = static_cast<std::uint64_t>(d.n() - j + 1);
  Deck::Cards cards;
  for (const auto& [code, count] : raw) {
    if (count % divisor != 0) {
      throw Error(Errc::InconsistentDeck, "subcard " + code.str() + " count " + std::to_string(count) +
                                              " not divisible by " + std::to_string(divisor));
    }
    cards.emplace(code, count / divisor);
  }
  return Deck(d.n(), j - 1, std::move(cards));
}

std::uint64_t count_induced_direct(const Graph& g, const Graph& f) {
  const int k = f.order();
  if (k > g.order()) return 0;
  if (k == 0) return 1;
  const int target_edges = f.edge_count();
  const CanonicalCode target = canonical_form(f);
  std::uint64_t count = 0;
  for_each_subset(g.order(), k, [&](VertexSet s) {
    if (induced_edge_count(g, s) != target_edges) return;
    if (canonical_form(induced_subgraph(g, s)) == target) ++count;
  });
  return count;
}

std::uint64_t count_induced_from_deck(const Deck& d, const Graph& f) {
  const int k = f.order();
  if (k < 1 || k > d.card_size()) {
    throw Error(Errc::InvalidParameter, "pattern order " + std::to_string(k) + " exceeds card size");
  }
  std::uint64_t sum = 0;
  for (const auto& [code, mult] : d.cards()) {
    sum = checked_add(sum, checked_mul(count_induced_direct(code.graph(), f), mult));
  }
  // Each copy of f in G lies in C(n-k, j-k) cards.
  const std::uint64_t per_copy = binomial(d.n() - k, d.card_size() - k);
  if (sum % per_copy != 0) {
    throw Error(Errc::InconsistentDeck, "card total " + std::to_string(sum) + " not divisible by " +
                                            std::to_string(per_copy));
  }
  return sum / per_copy;
}

std::uint64_t edge_count_from_deck(const Deck& d) {
  if (d.card_size() < 2) throw Error(Errc::InvalidCardSize, "edge count needs cards with 2+ vertices");
  return count_induced_from_deck(d, complete_graph(2));
}

void write_deck(std::ostream& out, const Deck& d) {
  out << "DECK n=" << d.n() << " j=" << d.card_size() << '\n';
  for (const auto& [code, mult] : d.cards()) out << code.str() << ' ' << mult << '\n';
}

std::string serialize_deck(const Deck& d) {
  std::ostringstream out;
  write_deck(out, d);
  return out.str();
}

Deck read_deck(std::istream& in) {
  std::string line;
  std::size_t offset = 0;
  if (!std::getline(in, line)) throw ParseError(0, "missing DECK header");
  static const std::regex header(R"(DECK n=(\d+) j=(\d+)\r?)");
  std::smatch m;
  if (!std::regex_match(line, m, header)) throw ParseError(0, "malformed DECK header");
  const int n = std::stoi(m[1]);
  const int j = std::stoi(m[2]);
  offset += line.size() + 1;
  Deck::Cards cards;
  std::string prev;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      offset += 1;
      continue;
    }
    const auto space = line.find(' ');
    if (space == std::string::npos) throw ParseError(offset, "expected '<code> <multiplicity>'");
    std::string code = line.substr(0, space);
    std::string count = line.substr(space + 1);
    if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(offset + space + 1, "multiplicity is not a nonnegative integer");
    }
    if (!prev.empty() && code <= prev) throw ParseError(offset, "codes must be strictly increasing");
    Graph card;
    try {
      card = from_graph6(code);
    } catch (const ParseError& e) {
      throw ParseError(offset + e.offset(), "bad card code");
    }
    if (canonical_form(card).str() != code) throw ParseError(offset, "card code is not canonical");
    cards.emplace(CanonicalCode(code), std::stoull(count));
    prev = code;
    offset += line.size() + 1;
  }
  return Deck(n, j, std::move(cards));
}

Deck parse_deck(const std::string& text) {
  std::istringstream in(text);
  return read_deck(in);
}

}  // namespace deckforge
