#include "deckforge/reconstruct.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <regex>
#include <sstream>

#include "deckforge/graph6.hpp"
#include "deckforge/subsets.hpp"
#include "deckforge/vines.hpp"

namespace deckforge {

Family::Family(Kind kind, int j) : kind_(kind), j_(j) {
  if (j < 0) throw Error(Errc::InvalidParameter, "family index must be nonnegative");
}

bool Family::contains(const Graph& g) const {
  if (g.order() == 0 || !is_connected(g)) return false;
  if (kind_ == Kind::Connected) return true;
  auto kind = classify_vine(g);
  return kind && *kind == VineKind{kind_ == Kind::Vines ? VineShape::Vine : VineShape::Evine, j_};
}

std::string Family::str() const {
  switch (kind_) {
    case Kind::Vines:
      return "vines:" + std::to_string(j_);
    case Kind::Evines:
      return "evines:" + std::to_string(j_);
    case Kind::Connected:
      break;
  }
  return "connected";
}

Family Family::parse(std::string_view text) {
  if (text == "connected") return connected();
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    auto name = text.substr(0, colon);
    auto digits = text.substr(colon + 1);
    int j = -1;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), j);
    if (ec == std::errc{} && end == digits.data() + digits.size() && j >= 0) {
      if (name == "vines") return vines(j);
      if (name == "evines") return evines(j);
    }
  }
  throw Error(Errc::InvalidParameter, "unknown family '" + std::string(text) + "'");
}

std::uint64_t CountingTable::m(const CanonicalCode& code) const {
  auto it = entries.find(code);
  return it == entries.end() ? 0 : it->second.m_count;
}

std::uint64_t CountingTable::total_m() const {
  std::uint64_t sum = 0;
  for (const auto& [code, e] : entries) sum = checked_add(sum, e.m_count);
  return sum;
}

namespace {

bool connected_within(const Graph& g, VertexSet s) {
  if (s.empty()) return false;
  VertexSet seen = VertexSet::single(s.first());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & s) - seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

std::map<CanonicalCode, std::uint64_t> enumerate_members(const Graph& g, const Family& family) {
  std::map<CanonicalCode, std::uint64_t> out;
  const int n = g.order();
  const int min_size = family.kind() == Family::Kind::Connected ? 1
                       : family.kind() == Family::Kind::Vines  ? 2 * family.j() + 1
                                                               : 2 * family.j() + 2;
  const bool trees_only = family.kind() != Family::Kind::Connected;
  for (int size = min_size; size <= n; ++size) {
    for_each_subset(n, size, [&](VertexSet s) {
      if (trees_only && induced_edge_count(g, s) != size - 1) return;
      if (!connected_within(g, s)) return;
      Graph h = induced_subgraph(g, s);
      if (family.contains(h)) ++out[canonical_form(h)];
    });
  }
  return out;
}

constexpr int kEnumerationLimit = 18;
constexpr std::size_t kMemoCapacity = 1 << 16;

std::mutex memo_mutex;
std::map<std::pair<CanonicalCode, Family>, std::map<CanonicalCode, std::uint64_t>> member_memo;

std::map<CanonicalCode, std::uint64_t> members_of(const CanonicalCode& code, const Family& family) {
  {
    std::lock_guard lock(memo_mutex);
    auto it = member_memo.find({code, family});
    if (it != member_memo.end()) return it->second;
  }
  auto counts = enumerate_members(code.graph(), family);
  std::lock_guard lock(memo_mutex);
  if (member_memo.size() >= kMemoCapacity) member_memo.clear();
  member_memo.try_emplace({code, family}, counts);
  return counts;
}

using MemberCache = std::map<CanonicalCode, std::map<CanonicalCode, std::uint64_t>>;

// s(f, h) for family members f, h.
std::uint64_t count_between(const CanonicalCode& f, const CanonicalCode& h, const Family& family,
                            MemberCache& cache) {
  if (f.order() > h.order()) return 0;
  if (h.order() > kEnumerationLimit) return count_induced_direct(h.graph(), f.graph());
  auto slot = cache.find(h);
  if (slot == cache.end()) slot = cache.emplace(h, members_of(h, family)).first;
  auto it = slot->second.find(f);
  return it == slot->second.end() ? 0 : it->second;
}

}  // namespace

std::map<CanonicalCode, std::uint64_t> family_subgraph_counts(const Graph& g, const Family& family) {
  return enumerate_members(g, family);
}

Boundary zero_boundary(const Deck& d, const Family& family) {
  Boundary out;
  for (const auto& [code, mult] : d.cards()) {
    if (family.contains(code.graph())) out.emplace(code, 0);
  }
  return out;
}

CountingTable solve_maximal_counts(const Deck& d, const Family& family, const Boundary& boundary) {
  const int n = d.n();
  const int c = d.card_size();
  CountingTable table{family, d.params(), {}};

  // Raw per-card sums; dividing by C(n - |F|, c - |F|) gives s(F, G).
  std::map<CanonicalCode, std::uint64_t> raw;
  for (const auto& [card, mult] : d.cards()) {
    std::map<CanonicalCode, std::uint64_t> counts = members_of(card, family);
    for (const auto& [member, cnt] : counts) raw[member] = checked_add(raw[member], checked_mul(cnt, mult));
  }
  for (const auto& [member, total] : raw) {
    const std::uint64_t div = binomial(n - member.order(), c - member.order());
    if (total % div != 0) throw Error(Errc::InconsistentDeck, "induced count of " + member.str() + " is not integral");
    table.entries[member].s_count = total / div;
  }

  for (const auto& [code, value] : boundary) {
    if (code.order() < c) {
      throw Error(Errc::InvalidParameter, "boundary entry " + code.str() + " is smaller than the cards");
    }
    if (!family.contains(code.graph())) {
      throw Error(Errc::InvalidParameter, "boundary entry " + code.str() + " is not in family " + family.str());
    }
    table.entries[code].m_count = value;
  }
  for (const auto& [code, entry] : table.entries) {
    if (code.order() >= c && !boundary.contains(code)) {
      throw Error(Errc::MissingBoundary, "no boundary value for " + code.str());
    }
  }

  // Largest members first; the map is sorted by code, so order explicitly.
  std::vector<CanonicalCode> order;
  for (const auto& [code, entry] : table.entries) order.push_back(code);
  std::stable_sort(order.begin(), order.end(),
                   [](const CanonicalCode& a, const CanonicalCode& b) { return a.order() > b.order(); });

  MemberCache cache;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const CanonicalCode& f = order[i];
    if (f.order() >= c) continue;
    std::uint64_t covered = 0;
    for (std::size_t h = 0; h < i; ++h) {
      const CanonicalCode& big = order[h];
      if (big.order() <= f.order()) continue;
      const std::uint64_t mh = table.entries[big].m_count;
      if (mh == 0) continue;
      covered = checked_add(covered, checked_mul(count_between(f, big, family, cache), mh));
    }
    CountingEntry& entry = table.entries[f];
    const std::uint64_t s = entry.s_count.value_or(0);
    if (covered > s) {
      throw Error(Errc::InconsistentInput, "negative maximal count for " + f.str() + "; maximal " + family.str() +
                                               "-subgraphs are not unique");
    }
    entry.m_count = s - covered;
  }
  return table;
}

std::optional<std::map<CanonicalCode, std::uint64_t>> components_from_deck(const Deck& d) {
  const DeckParams p = d.params();
  if (p.n <= 2 * p.ell) throw Error(Errc::OutOfValidityRange, "components need n > 2 ell");
  std::uint64_t connected_cards = 0;
  Boundary boundary;
  for (const auto& [code, mult] : d.cards()) {
    if (!is_connected(code.graph())) continue;
    connected_cards = checked_add(connected_cards, mult);
    boundary.emplace(code, mult);
  }
  if (connected_cards > 1) return std::nullopt;
  CountingTable table = solve_maximal_counts(d, Family::connected(), boundary);
  std::map<CanonicalCode, std::uint64_t> out;
  for (const auto& [code, entry] : table.entries) {
    if (entry.m_count > 0) out.emplace(code, entry.m_count);
  }
  return out;
}

namespace {

void require_acyclic(const Deck& d) {
  if (!d.is_acyclic()) throw Error(Errc::NotAcyclicDeck, "deck has a card with a cycle");
}

}  // namespace

DegreeList degree_list_from_deck(const Deck& d) {
  const DeckParams p = d.params();
  if (p.is_excluded_case()) throw Error(Errc::ExcludedCase, "degree lists are not determined at (n, ell) = (5, 2)");
  if (!p.in_main_range()) throw Error(Errc::OutOfValidityRange, "degree lists need n >= 2 ell + 1");
  require_acyclic(d);
  const int n = p.n;
  const int c = p.card_size();
  const std::uint64_t m = edge_count_from_deck(d);

  DegreeList degrees;
  if (p.ell == 1) {
    for (const auto& [code, mult] : d.cards()) {
      const std::uint64_t e = static_cast<std::uint64_t>(code.graph().edge_count());
      if (e > m) throw Error(Errc::InconsistentInput, "card has more edges than the graph");
      degrees.insert(degrees.end(), mult, static_cast<int>(m - e));
    }
    std::sort(degrees.rbegin(), degrees.rend());
    return degrees;
  }

  // Big vertices have degree >= c - 1; each spans C(d, c - 1) star cards.
  const CanonicalCode star_card = canonical_form(star_graph(c - 1));
  auto it = d.cards().find(star_card);
  const std::uint64_t stars = it == d.cards().end() ? 0 : it->second;
  std::map<int, std::uint64_t> big;
  if (stars == 0) {
  } else if (stars == 2) {
    big[c - 1] = 2;
  } else if (n == 2 * p.ell + 1 && stars == static_cast<std::uint64_t>(p.ell) + 2) {
    big[c - 1] = 1;
    big[c] = 1;
  } else {
    int found = -1;
    for (int deg = c - 1; deg < n && found < 0; ++deg) {
      if (binomial(deg, c - 1) == stars) found = deg;
    }
    if (found < 0) throw Error(Errc::InconsistentInput, "star card count matches no big-vertex configuration");
    big[found] = 1;
  }

  Boundary boundary;
  boundary.emplace(star_card, 0);
  for (const auto& [deg, count] : big) boundary[canonical_form(star_graph(deg))] = count;
  const CountingTable table = solve_maximal_counts(d, Family::vines(1), boundary);

  std::uint64_t degree_sum = 0;
  std::uint64_t placed = 0;
  for (const auto& [code, entry] : table.entries) {
    const int deg = code.order() - 1;
    degrees.insert(degrees.end(), entry.m_count, deg);
    degree_sum = checked_add(degree_sum, checked_mul(entry.m_count, static_cast<std::uint64_t>(deg)));
    placed = checked_add(placed, entry.m_count);
  }
  const std::uint64_t twice_m = checked_mul(m, 2);
  if (degree_sum > twice_m) throw Error(Errc::InconsistentInput, "degree sum exceeds twice the edge count");
  const std::uint64_t leaves = twice_m - degree_sum;
  if (checked_add(placed, leaves) > static_cast<std::uint64_t>(n)) {
    throw Error(Errc::InconsistentInput, "more degrees than vertices");
  }
  degrees.insert(degrees.end(), leaves, 1);
  degrees.insert(degrees.end(), n - placed - leaves, 0);
  std::sort(degrees.rbegin(), degrees.rend());
  return degrees;
}

namespace {

int validated_k(const Deck& d, int j) {
  if (j < 0) throw Error(Errc::InvalidParameter, "j must be nonnegative");
  if (!d.params().in_main_range()) throw Error(Errc::OutOfValidityRange, "center counts need n >= 2 ell + 1");
  const KValue k = k_from_deck(d);
  if (!k.is_defined()) throw Error(Errc::OutOfValidityRange, "k is undefined for this deck");
  return k.value();
}

}  // namespace

std::uint64_t j_center_count_from_deck(const Deck& d, int j) {
  const int k = validated_k(d, j);
  if (j > k + 1) throw Error(Errc::OutOfValidityRange, "j exceeds k + 1");
  if (j == k + 1) {
    for (const auto& [code, mult] : d.cards()) {
      const Graph card = code.graph();
      if (is_connected(card) && diameter(card) == 2 * k + 2) {
        throw Error(Errc::OutOfValidityRange, "j = k + 1 needs no card of diameter 2k + 2");
      }
    }
  }
  const Family family = Family::vines(j);
  return solve_maximal_counts(d, family, zero_boundary(d, family)).total_m();
}

std::uint64_t j_central_edge_count_from_deck(const Deck& d, int j) {
  const int k = validated_k(d, j);
  if (j > k) throw Error(Errc::OutOfValidityRange, "central edge counts need j <= k");
  const Family family = Family::evines(j);
  return solve_maximal_counts(d, family, zero_boundary(d, family)).total_m();
}

void write_table(std::ostream& out, const CountingTable& t) {
  out << "TABLE n=" << t.params.n << " j=" << t.params.card_size() << " family=" << t.family.str() << '\n';
  for (const auto& [code, e] : t.entries) {
    out << code.str() << ' ';
    if (e.s_count) {
      out << *e.s_count;
    } else {
      out << '-';
    }
    out << ' ' << e.m_count << '\n';
  }
}

std::string serialize_table(const CountingTable& t) {
  std::ostringstream out;
  write_table(out, t);
  return out.str();
}

CountingTable read_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(0, "missing TABLE header");
  static const std::regex header(R"(TABLE n=(\d+) j=(\d+) family=(\S+?)\r?)");
  std::smatch match;
  if (!std::regex_match(line, match, header)) throw ParseError(0, "malformed TABLE header");
  CountingTable t;
  const int n = std::stoi(match[1]);
  const int j = std::stoi(match[2]);
  if (j < 1 || j > n) throw ParseError(0, "card size out of range");
  t.params = {n, n - j};
  try {
    t.family = Family::parse(match[3].str());
  } catch (const Error&) {
    throw ParseError(line.find("family="), "unknown family");
  }
  std::size_t offset = line.size() + 1;
  static const std::regex row(R"((\S+) (\d+|-) (\d+)\r?)");
  std::string prev;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") {
      offset += line.size() + 1;
      continue;
    }
    if (!std::regex_match(line, match, row)) throw ParseError(offset, "expected '<code> <s> <m>'");
    const std::string code = match[1];
    if (!prev.empty() && code <= prev) throw ParseError(offset, "codes must be strictly increasing");
    Graph g;
    try {
      g = from_graph6(code);
    } catch (const ParseError& e) {
      throw ParseError(offset + e.offset(), "bad code");
    }
    if (canonical_form(g).str() != code) throw ParseError(offset, "code is not canonical");
    CountingEntry e;
    if (match[2] != "-") e.s_count = std::stoull(match[2]);
    e.m_count = std::stoull(match[3]);
    t.entries.emplace(CanonicalCode(code), e);
    prev = code;
    offset += line.size() + 1;
  }
  return t;
}

CountingTable parse_table(const std::string& text) {
  std::istringstream in(text);
  return read_table(in);
}

}  // namespace deckforge
