#include "deckforge/canon.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>

#include "deckforge/graph6.hpp"

namespace deckforge {

int CanonicalCode::order() const {
  if (text_.empty()) return 0;
  if (static_cast<unsigned char>(text_[0]) == 126) return graph().order();
  return static_cast<unsigned char>(text_[0]) - 63;
}

Graph CanonicalCode::graph() const { return decode_graph6_any(text_); }

namespace {

using Cells = std::vector<std::uint64_t>;
using Perm = std::array<std::uint8_t, kMaxVertices>;
// Column b of a relabeled graph: bit (63 - a) set when a < b are adjacent.
// Lexicographic order on columns 1..n-1 equals graph6 byte order.
using Key = std::array<std::uint64_t, kMaxVertices>;

// Splits cells until every cell is equitable with respect to every other.
// Fragments are ordered by neighbor count, so the result depends only on the
// graph structure and the incoming cell order, never on vertex labels.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const std::uint64_t splitter = cells[s];
      for (std::size_t x = 0; x < cells.size(); ++x) {
        const std::uint64_t cell = cells[x];
        if (std::popcount(cell) == 1) continue;
        std::array<std::uint64_t, kMaxVertices + 1> by_count{};
        int lo = kMaxVertices, hi = -1;
        for (int v : VertexSet(cell)) {
          int c = std::popcount(g.row(v) & splitter);
          by_count[c] |= std::uint64_t{1} << v;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) continue;
        Cells fragments;
        for (int c = lo; c <= hi; ++c) {
          if (by_count[c]) fragments.push_back(by_count[c]);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), fragments.begin(), fragments.end());
        changed = true;
        break;
      }
    }
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) { seed_twin_automorphisms(); }

  void run() {
    Cells cells;
    if (n_ > 0) cells.push_back(g_.vertices().bits());
    std::vector<int> prefix;
    search(cells, prefix);
  }

  std::vector<int> labeling() const { return {best_lab_.begin(), best_lab_.begin() + n_}; }

  Graph canonical_graph() const {
    Graph h(n_);
    for (int b = 1; b < n_; ++b) {
      for (int a = 0; a < b; ++a) {
        if ((best_key_[b] >> (63 - a)) & 1U) h.add_edge(a, b);
      }
    }
    return h;
  }

 private:
  // Twins (equal open or closed neighborhoods) can always be swapped.
  void seed_twin_automorphisms() {
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
        if ((g_.row(u) & mask) == (g_.row(v) & mask)) {
          Perm p = identity();
          std::swap(p[u], p[v]);
          autos_.push_back(p);
        }
      }
    }
  }

  Perm identity() const {
    Perm p{};
    for (int v = 0; v < kMaxVertices; ++v) p[v] = static_cast<std::uint8_t>(v);
    return p;
  }

  // Orbit roots of the group generated by stored automorphisms that fix
  // every prefix vertex.
  std::array<int, kMaxVertices> orbits(const std::vector<int>& prefix) const {
    std::array<int, kMaxVertices> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& p : autos_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return p[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(p[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(Cells cells, std::vector<int>& prefix) {
    refine(g_, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (std::popcount(cells[i]) > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const std::uint64_t cell = cells[target];
    VertexSet tried;
    for (int v : VertexSet(cell)) {
      if (!tried.empty()) {
        auto orbit = orbits(prefix);
        bool seen = false;
        for (int u : tried) seen = seen || orbit[u] == orbit[v];
        if (seen) continue;
      }
      tried.insert(v);
      Cells child = cells;
      child[target] = cell & ~(std::uint64_t{1} << v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), std::uint64_t{1} << v);
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  void leaf(const Cells& cells) {
    Perm lab{}, inv{};
    for (std::size_t i = 0; i < cells.size(); ++i) {
      int v = std::countr_zero(cells[i]);
      lab[v] = static_cast<std::uint8_t>(i);
      inv[i] = static_cast<std::uint8_t>(v);
    }
    Key key{};
    for (int b = 1; b < n_; ++b) {
      std::uint64_t row = g_.row(inv[b]);
      std::uint64_t col = 0;
      for (int a = 0; a < b; ++a) {
        if ((row >> inv[a]) & 1U) col |= std::uint64_t{1} << (63 - a);
      }
      key[b] = col;
    }
    if (!have_leaf_) {
      have_leaf_ = true;
      first_key_ = best_key_ = key;
      first_lab_ = best_lab_ = lab;
      first_inv_ = best_inv_ = inv;
      return;
    }
    if (key == first_key_) record_automorphism(first_inv_, lab);
    int cmp = compare(key, best_key_);
    if (cmp < 0) {
      best_key_ = key;
      best_lab_ = lab;
      best_inv_ = inv;
    } else if (cmp == 0 && key != first_key_) {
      record_automorphism(best_inv_, lab);
    }
  }

  // Leaves with identical relabeled graphs differ by the automorphism
  // v -> other_inv[lab[v]].
  void record_automorphism(const Perm& other_inv, const Perm& lab) {
    Perm p = identity();
    for (int v = 0; v < n_; ++v) p[v] = other_inv[lab[v]];
    autos_.push_back(p);
  }

  int compare(const Key& a, const Key& b) const {
    for (int i = 1; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  const Graph& g_;
  int n_;
  bool have_leaf_ = false;
  Key first_key_{}, best_key_{};
  Perm first_lab_{}, best_lab_{}, first_inv_{}, best_inv_{};
  std::vector<Perm> autos_;
};

// Packs graphs on at most 8 vertices into one word: order in the top byte,
// upper triangle below.
std::uint64_t small_key(const Graph& g) {
  std::uint64_t key = static_cast<std::uint64_t>(g.order()) << 56;
  int bit = 0;
  for (int v = 1; v < g.order(); ++v) {
    key |= (g.row(v) & ((std::uint64_t{1} << v) - 1)) << bit;
    bit += v;
  }
  return key;
}

constexpr int kMemoMaxOrder = 8;
constexpr std::size_t kMemoCapacity = std::size_t{1} << 21;

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  Canonizer c(g);
  c.run();
  return c.labeling();
}

CanonicalCode canonical_form(const Graph& g) {
  if (g.order() <= kMemoMaxOrder) {
    thread_local std::unordered_map<std::uint64_t, CanonicalCode> memo;
    const std::uint64_t key = small_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Canonizer c(g);
    c.run();
    CanonicalCode code(to_graph6(c.canonical_graph()));
    if (memo.size() >= kMemoCapacity) memo.clear();
    memo.emplace(key, code);
    return code;
  }
  Canonizer c(g);
  c.run();
  return CanonicalCode(to_graph6(c.canonical_graph()));
}

namespace {

class IsoMatcher {
 public:
  IsoMatcher(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.order()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    // Map high-degree vertices first, then prefer vertices adjacent to
    // already-placed ones so adjacency checks prune early.
    std::vector<int> placed;
    std::vector<bool> used(n_, false);
    for (int step = 0; step < n_; ++step) {
      int best = -1, best_links = -1;
      for (int v = 0; v < n_; ++v) {
        if (used[v]) continue;
        int links = 0;
        for (int p : placed) links += g_.adjacent(v, p) ? 1 : 0;
        if (best < 0 || links > best_links || (links == best_links && g_.degree(v) > g_.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      used[best] = true;
      placed.push_back(best);
    }
    order_ = placed;
    map_.assign(n_, -1);
  }

  bool match(int depth = 0) {
    if (depth == n_) return true;
    const int v = order_[depth];
    for (int w = 0; w < n_; ++w) {
      if (taken_.contains(w) || h_.degree(w) != g_.degree(v)) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        int u = order_[d];
        ok = g_.adjacent(u, v) == h_.adjacent(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      taken_.insert(w);
      if (match(depth + 1)) return true;
      taken_.erase(w);
      map_[v] = -1;
    }
    return false;
  }

 private:
  const Graph& g_;
  const Graph& h_;
  int n_;
  std::vector<int> order_;
  std::vector<int> map_;
  VertexSet taken_;
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  IsoMatcher m(g, h);
  return m.match();
}

}  // namespace deckforge
