#include <random>
#include <set>

#include "deckforge/vines.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace deckforge;

namespace {

template <typename Fn>
Errc error_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidParameter;
}

// Induced subsets of g that are trees with the given diameter.
std::vector<VertexSet> induced_trees_with_diameter(const Graph& g, int diam) {
  return oracle::subsets_where(g, [&](VertexSet s) {
    return s.size() >= diam + 1 && oracle::brute_is_tree(g, s) && oracle::brute_diameter(g, s) == diam;
  });
}

VertexSet brute_j_centers(const Graph& g, int j) {
  VertexSet out;
  for (VertexSet s : induced_trees_with_diameter(g, 2 * j)) out |= oracle::brute_tree_centers(g, s);
  return out;
}

std::set<Edge> brute_central_edges(const Graph& g, int j) {
  std::set<Edge> out;
  for (VertexSet s : induced_trees_with_diameter(g, 2 * j + 1)) {
    auto c = oracle::brute_tree_centers(g, s).to_vector();
    REQUIRE(c.size() == 2);
    out.insert({c[0], c[1]});
  }
  return out;
}

// Literal deck-side k: vines are looked for among induced subgraphs of cards.
KValue brute_k_from_deck(const Deck& d) {
  const int c = d.card_size();
  std::vector<int> max_size(2 * c + 2, 0);
  for (const auto& [code, mult] : d.cards()) {
    Graph card = code.graph();
    for (VertexSet s : oracle::subsets_where(card, [&](VertexSet s) { return oracle::brute_is_tree(card, s); })) {
      int diam = oracle::brute_diameter(card, s);
      max_size[diam] = std::max(max_size[diam], s.size());
    }
  }
  int k = -1;
  for (int cand = 0; 2 * cand + 1 < static_cast<int>(max_size.size()); ++cand) {
    if (max_size[2 * cand + 1] == 0) break;
    bool ok = true;
    for (int j = 0; j <= cand; ++j) ok = ok && max_size[2 * j] < c && max_size[2 * j + 1] < c;
    if (!ok) break;
    k = cand;
  }
  return k < 0 ? KValue::undefined() : KValue::of(k);
}

Graph random_forest(int n, std::mt19937_64& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    if (rng() % 4 == 0) continue;
    g.add_edge(v, static_cast<int>(rng() % v));
  }
  return relabel(g, oracle::random_permutation(n, rng));
}

}  // namespace

TEST_CASE("classify_vine") {
  CHECK(classify_vine(path_graph(5)) == VineKind{VineShape::Vine, 2});
  CHECK(classify_vine(path_graph(4)) == VineKind{VineShape::Evine, 1});
  CHECK_FALSE(classify_vine(cycle_graph(4)).has_value());
  CHECK(classify_vine(Graph(1)) == VineKind{VineShape::Vine, 0});
  CHECK(classify_vine(star_graph(4)) == VineKind{VineShape::Vine, 1});
  CHECK_FALSE(classify_vine(disjoint_union(path_graph(2), path_graph(2))).has_value());
}

TEST_CASE("balls") {
  CHECK(ball(path_graph(7), 3, 2) == VertexSet::of({1, 2, 3, 4, 5}));
  CHECK(ball(cycle_graph(5), 0, 2) == VertexSet::range(5));
  CHECK(ball(star_graph(4), 0, 1) == VertexSet::range(5));
  CHECK(eball(path_graph(7), Edge{2, 3}, 1) == VertexSet::of({1, 2, 3, 4}));
}

TEST_CASE("j-centers and central edges") {
  CHECK(j_centers(path_graph(7), 2) == VertexSet::of({2, 3, 4}));
  CHECK(j_centers(cycle_graph(7), 2) == VertexSet::range(7));
  CHECK(j_centers(star_graph(4), 1) == VertexSet::of({0}));
  CHECK(j_centers(path_graph(4), 0) == VertexSet::range(4));
  CHECK(j_central_edges(path_graph(6), 2) == std::vector<Edge>{{2, 3}});
  CHECK(j_central_edges(cycle_graph(7), 2).size() == 7);
  CHECK(j_central_edges(cycle_graph(6), 2).empty());

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const Graph g = trial % 2 ? oracle::random_graph(n, 0.3, rng) : random_forest(n, rng);
    for (int j = 0; j <= 3; ++j) {
      REQUIRE(j_centers(g, j) == brute_j_centers(g, j));
      auto edges = j_central_edges(g, j);
      REQUIRE(std::set<Edge>(edges.begin(), edges.end()) == brute_central_edges(g, j));
      REQUIRE(has_induced_path(g, 2 * j + 1) == !j_centers(g, j).empty());
    }
  }
}

TEST_CASE("maximal_vine_at") {
  CHECK(maximal_vine_at(path_graph(7), 3, 2) == path_graph(5));
  CHECK(error_code([] { maximal_vine_at(path_graph(7), 0, 2); }) == Errc::NotACenter);
  CHECK(maximal_evine_at(path_graph(8), Edge{3, 4}, 2) == path_graph(6));

  // Card of radius 3 inside a tree: z with three arms of length 3, each arm
  // extended by one more vertex outside the card. The 2-ball at z is the
  // spider with three legs of length 2.
  Graph fig = spider_graph({4, 4, 4});
  CHECK(maximal_vine_at(fig, 0, 2) == spider_graph({2, 2, 2}));

  // A (2j+1)-cycle plus two length-j paths grown from one cycle vertex.
  for (int j = 1; j <= 3; ++j) {
    const int q = 2 * j + 1;
    Graph g(q + 2 * j);
    for (int i = 0; i < q; ++i) g.add_edge(i, (i + 1) % q);
    int next = q;
    for (int leg = 0; leg < 2; ++leg) {
      int prev = 0;
      for (int i = 0; i < j; ++i) {
        g.add_edge(prev, next);
        prev = next++;
      }
    }
    CHECK(error_code([&] { maximal_vine_at(g, 0, j); }) == Errc::GirthTooSmall);

    // H: delete the two cycle vertices farthest from vertex 0.
    VertexSet h = g.vertices() - VertexSet::of({j, j + 1});
    REQUIRE(oracle::brute_is_tree(g, h));
    REQUIRE(oracle::brute_diameter(g, h) == 2 * j);
    auto vines = oracle::subsets_where(g, [&](VertexSet s) {
      return oracle::brute_is_tree(g, s) && oracle::brute_diameter(g, s) == 2 * j;
    });
    std::vector<VertexSet> containing;
    for (VertexSet s : oracle::maximal_only(vines)) {
      if (h.is_subset_of(s)) containing.push_back(s);
    }
    CHECK(containing.size() == 2);
  }
}

TEST_CASE("maximal vines correspond to centers under the girth condition") {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const Graph g = trial % 3 ? random_forest(n, rng) : oracle::random_graph(n, 0.25, rng);
    for (int j = 1; j <= 2; ++j) {
      if (!girth(g).at_least(2 * j + 2)) continue;
      auto vines = oracle::subsets_where(g, [&](VertexSet s) {
        return oracle::brute_is_tree(g, s) && oracle::brute_diameter(g, s) == 2 * j;
      });
      auto maximal = oracle::maximal_only(vines);
      VertexSet centers_seen;
      for (VertexSet s : maximal) {
        VertexSet c = oracle::brute_tree_centers(g, s);
        REQUIRE(c.size() == 1);
        REQUIRE_FALSE(centers_seen.contains(c.first()));
        centers_seen |= c;
        REQUIRE(induced_subgraph(g, s) == maximal_vine_at(g, c.first(), j));
      }
      REQUIRE(centers_seen == j_centers(g, j));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("k of a graph") {
  CHECK(k_of_graph(oracle::chair(), {5, 2}) == KValue::of(0));
  CHECK(k_of_graph(path_graph(13), {13, 6}) == KValue::of(2));
  CHECK(k_of_graph(empty_graph(6), {6, 2}) == KValue::undefined());
  CHECK(k_of_graph(path_graph(7), {7, 3}) == KValue::of(0));
  CHECK(k_of_graph(cycle_graph(7), {7, 2}) == KValue::of(1));
  CHECK_THROWS_AS(KValue::undefined().value(), Error);
}

TEST_CASE("k from a deck") {
  CHECK(k_from_deck(compute_deck(oracle::chair(), 3)) == KValue::of(0));
  // P4 is a 1-evine card with n - ell = 4 vertices, so k stops at 0.
  CHECK(k_from_deck(compute_deck(path_graph(7), 4)) == KValue::of(0));
  CHECK(brute_k_from_deck(compute_deck(path_graph(7), 4)) == KValue::of(0));
  CHECK(k_from_deck(compute_deck(empty_graph(5), 3)) == KValue::undefined());
  CHECK(error_code([] { k_from_deck(compute_deck(complete_graph(5), 4)); }) == Errc::NotAcyclicDeck);
}

TEST_CASE("k reductions agree with the literal definition") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const int ell = 1 + static_cast<int>(rng() % ((n - 1) / 2));
    const Graph g = trial % 2 ? random_forest(n, rng) : oracle::random_graph(n, 0.2, rng);
    const int c = n - ell;
    REQUIRE(k_of_graph(g, {n, ell}) == fixtures::brute_k(g, c));
    const Deck d = compute_deck(g, c);
    if (d.is_acyclic()) {
      REQUIRE(k_from_deck(d) == brute_k_from_deck(d));
      if (n >= 2 * ell + 1) REQUIRE(k_from_deck(d) == k_of_graph(g, {n, ell}));
    }
  }
}
