#include "deckforge/trees.hpp"

#include <algorithm>
#include <queue>

#include "deckforge/vines.hpp"

namespace deckforge {

namespace {

void require_tree(const Graph& t) {
  if (t.order() == 0 || !is_tree(t)) throw Error(Errc::NotATree, "input is not a tree");
}

void require_order(const Graph& t, DeckParams params) {
  if (t.order() != params.n || params.ell < 0 || params.card_size() < 1) {
    throw Error(Errc::InvalidParameter, "parameters do not match the tree");
  }
}

// BFS distances from `source` using only vertices of `allowed`; -1 elsewhere.
std::vector<int> distances_within(const Graph& g, VertexSet allowed, int source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : g.neighbors(v) & allowed) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

// Parent of each vertex when its component is rooted at `root`; -1 for the
// root and for vertices in other components.
std::vector<int> parents_from(const Graph& g, int root) {
  std::vector<int> parent(g.order(), -1);
  std::vector<bool> seen(g.order(), false);
  std::queue<int> q;
  seen[root] = true;
  q.push(root);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        q.push(w);
      }
    }
  }
  return parent;
}

}  // namespace

VertexSet branch_vertices(const Graph& t) {
  require_tree(t);
  VertexSet out;
  for (int v = 0; v < t.order(); ++v) {
    if (t.degree(v) >= 3) out.insert(v);
  }
  return out;
}

std::vector<std::vector<int>> legs(const Graph& t) {
  const VertexSet branches = branch_vertices(t);
  if (branches.empty()) throw Error(Errc::IsAPath, "a path has no legs");
  std::vector<std::vector<int>> out;
  for (int leaf = 0; leaf < t.order(); ++leaf) {
    if (t.degree(leaf) != 1) continue;
    std::vector<int> leg{leaf};
    int prev = -1;
    int cur = leaf;
    while (!branches.contains(cur)) {
      const int next = (t.neighbors(cur) - VertexSet::single(prev < 0 ? cur : prev)).first();
      prev = cur;
      cur = next;
      leg.push_back(cur);
    }
    out.push_back(std::move(leg));
  }
  return out;
}

std::optional<SpiderShape> spider_shape(const Graph& t) {
  const VertexSet branches = branch_vertices(t);
  if (branches.size() > 1) return std::nullopt;
  SpiderShape shape;
  if (branches.empty()) {
    shape.root = centers(t).first();
    for (int w : t.neighbors(shape.root)) {
      const std::vector<int> dist = distances_within(t, t.vertices() - VertexSet::single(shape.root), w);
      shape.legs.push_back(1 + *std::max_element(dist.begin(), dist.end()));
    }
  } else {
    shape.root = branches.first();
    for (const auto& leg : legs(t)) shape.legs.push_back(static_cast<int>(leg.size()) - 1);
  }
  std::sort(shape.legs.rbegin(), shape.legs.rend());
  return shape;
}

std::optional<SpiderlyWitness> ell_spiderly_witness(const Graph& t, DeckParams params) {
  require_tree(t);
  require_order(t, params);
  const int c = params.card_size();
  for (int z = 0; z < t.order(); ++z) {
    const std::vector<int> dist = distances_from(t, z);
    const std::vector<int> parent = parents_from(t, z);
    // Far vertices of each branch at z must lie on one path from z, so take
    // them deepest first and reject any that branch off an earlier path.
    std::vector<int> far;
    for (int v = 0; v < t.order(); ++v) {
      if (2 * dist[v] > c - 2) far.push_back(v);
    }
    std::stable_sort(far.begin(), far.end(), [&](int a, int b) { return dist[a] > dist[b]; });
    VertexSet spider = VertexSet::single(z);
    bool ok = true;
    for (int v : far) {
      if (spider.contains(v)) continue;
      for (int w = v; w != z && ok; w = parent[w]) ok = !spider.contains(w);
      if (!ok) break;
      for (int w = v; w != z; w = parent[w]) spider.insert(w);
    }
    if (ok) return SpiderlyWitness{z, spider};
  }
  return std::nullopt;
}

bool is_ell_spiderly(const Graph& t, DeckParams params) { return ell_spiderly_witness(t, params).has_value(); }

std::uint64_t full_paths_count(const Graph& t, DeckParams params) {
  require_order(t, params);
  if (!is_forest(t)) throw Error(Errc::NotATree, "full paths are counted in forests");
  const int c = params.card_size();
  if (c == 1) return static_cast<std::uint64_t>(t.order());
  std::uint64_t count = 0;
  for (int u = 0; u < t.order(); ++u) {
    const std::vector<int> dist = distances_from(t, u);
    for (int v = u + 1; v < t.order(); ++v) count += dist[v] == c - 1 ? 1 : 0;
  }
  return count;
}

namespace {

struct CardShape {
  VertexSet centers;
};

CardShape check_card(const Graph& f, VertexSet card, int j) {
  if (j < 1) throw Error(Errc::OutOfValidityRange, "the marking bound fails for j = 0");
  if (!is_forest(f)) throw Error(Errc::NotATree, "marking is defined for forests");
  if (card.empty() || !card.is_subset_of(f.vertices())) throw Error(Errc::BadCard, "card is not a vertex subset");
  CardShape shape;
  int radius = f.order();
  std::vector<int> ecc(f.order(), -1);
  for (int v : card) {
    const std::vector<int> dist = distances_within(f, card, v);
    int e = 0;
    for (int w : card) {
      if (dist[w] < 0) throw Error(Errc::BadCard, "card is not connected");
      e = std::max(e, dist[w]);
    }
    ecc[v] = e;
    radius = std::min(radius, e);
  }
  if (radius != j + 1) {
    throw Error(Errc::BadCard, "card radius " + std::to_string(radius) + " != j + 1 = " + std::to_string(j + 1));
  }
  for (int v : card) {
    if (ecc[v] == radius) shape.centers.insert(v);
  }
  return shape;
}

MarkingReport mark_from(const Graph& f, VertexSet card, int j, int z) {
  MarkingReport r;
  r.j = j;
  r.ell = f.order() - card.size();
  r.card = card;
  r.z = z;

  const std::vector<int> card_dist = distances_within(f, card, z);
  const std::vector<int> parent = parents_from(f, z);
  for (int v : card) {
    if (card_dist[v] != j + 1) continue;
    int w = v;
    while (parent[w] != z) w = parent[w];
    r.y.insert(w);
  }
  r.d_c = r.y.size();

  const VertexSet all_centers = j_centers(f, j);
  r.center_count = all_centers.size();
  const VertexSet component = within_distance(f, card, f.order());

  VertexSet marked;
  for (int x : all_centers & component) {
    if (x == z || r.y.contains(x)) continue;
    // Descendants of x at depth j, rooted at z.
    const VertexSet below = f.vertices() - (parent[x] >= 0 ? VertexSet::single(parent[x]) : VertexSet{});
    const std::vector<int> dist = distances_within(f, below, x);
    int target = -1;
    for (int w = 0; w < f.order() && target < 0; ++w) {
      if (dist[w] == j) target = w;
    }
    if (target < 0) {
      r.unmarked_centers.insert(x);
      continue;
    }
    if (marked.contains(target)) r.injective = false;
    marked.insert(target);
    if (card.contains(target)) r.marks_outside_card = false;
    r.marks.emplace_back(x, target);
  }
  r.all_outside_marked = (f.vertices() - card).is_subset_of(marked);
  r.is_tree = is_tree(f);
  return r;
}

}  // namespace

MarkingReport run_marking(const Graph& f, VertexSet card, int j) {
  const CardShape shape = check_card(f, card, j);
  return mark_from(f, card, j, shape.centers.first());
}

std::vector<MarkingReport> run_marking_all_centers(const Graph& f, VertexSet card, int j) {
  const CardShape shape = check_card(f, card, j);
  std::vector<MarkingReport> out;
  for (int z : shape.centers) out.push_back(mark_from(f, card, j, z));
  return out;
}

}  // namespace deckforge
