#include "deckforge/trees.hpp"
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

// Two adjacent centers 0 and 1; center 0 carries legs a0, a1 and center 1
// carries legs b0, b1.
Graph double_broom(int a0, int a1, int b0, int b1) {
  Graph g(2 + a0 + a1 + b0 + b1);
  g.add_edge(0, 1);
  int next = 2;
  for (auto [root, len] : {std::pair{0, a0}, {0, a1}, {1, b0}, {1, b1}}) {
    int prev = root;
    for (int i = 0; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

// Some vertex subset induces a spider with a root such that every vertex
// outside lies within (n - ell - 2) / 2 of the root.
bool brute_spiderly(const Graph& t, int ell) {
  const int n = t.order();
  const int c = n - ell;
  const auto dist = oracle::all_pairs(t);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet u(mask);
    if (!oracle::brute_is_tree(t, u)) continue;
    VertexSet branch;
    for (int v : u) {
      if ((t.neighbors(v) & u).size() >= 3) branch.insert(v);
    }
    if (branch.size() > 1) continue;
    const VertexSet roots = branch.empty() ? u : branch;
    for (int z : roots) {
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) ok = u.contains(v) || 2 * dist[z][v] <= c - 2;
      if (ok) return true;
    }
  }
  return false;
}

// Subsets of size c that induce a path.
std::uint64_t brute_full_paths(const Graph& t, int c) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t.order()); ++mask) {
    const VertexSet s(mask);
    if (s.size() != c || !oracle::brute_is_tree(t, s)) continue;
    bool path = true;
    for (int v : s) path = path && (t.neighbors(v) & s).size() <= 2;
    count += path ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST_CASE("branch vertices and legs") {
  const Graph chair = oracle::chair();
  CHECK(branch_vertices(chair) == VertexSet::of({2}));
  std::vector<int> lengths;
  for (const auto& leg : legs(chair)) lengths.push_back(static_cast<int>(leg.size()) - 1);
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<int>{1, 1, 2});
  CHECK(legs(chair).front() == std::vector<int>{0, 2});

  CHECK(branch_vertices(path_graph(9)).empty());
  CHECK(error_code([] { legs(path_graph(9)); }) == Errc::IsAPath);
  CHECK(branch_vertices(double_broom(1, 2, 2, 1)) == VertexSet::of({0, 1}));
  CHECK(legs(double_broom(1, 2, 2, 1)).size() == 4);
  CHECK(error_code([] { branch_vertices(cycle_graph(4)); }) == Errc::NotATree);
  CHECK(error_code([] { branch_vertices(empty_graph(2)); }) == Errc::NotATree);
}

TEST_CASE("spider shapes") {
  CHECK(spider_shape(oracle::chair()) == SpiderShape{2, {2, 1, 1}});
  CHECK(spider_shape(spider_graph({3, 1, 2, 2})) == SpiderShape{0, {3, 2, 2, 1}});
  CHECK(spider_shape(path_graph(6)) == SpiderShape{2, {3, 2}});
  CHECK(spider_shape(Graph(1)) == SpiderShape{0, {}});
  CHECK_FALSE(spider_shape(double_broom(1, 1, 1, 1)).has_value());
}

TEST_CASE("ell-spiderly examples") {
  CHECK(is_ell_spiderly(spider_graph({4, 3, 3, 1}), {12, 5}));
  CHECK(is_ell_spiderly(path_graph(11), {11, 5}));
  const Graph broom = double_broom(2, 2, 2, 3);
  REQUIRE(broom.order() == 11);
  CHECK_FALSE(is_ell_spiderly(broom, {11, 5}));
  CHECK_FALSE(brute_spiderly(broom, 5));

  const auto w = ell_spiderly_witness(spider_graph({3, 3, 3}), {10, 4});
  REQUIRE(w.has_value());
  const Graph spider = induced_subgraph(spider_graph({3, 3, 3}), w->spider);
  REQUIRE(is_tree(spider));
  CHECK(branch_vertices(spider).size() <= 1);
}

TEST_CASE("ell-spiderly agrees with exhaustive spider search, trees n <= 10") {
  int positives = 0;
  int negatives = 0;
  for (int n = 1; n <= 10; ++n) {
    for (const Graph& t : fixtures::all_trees(n)) {
      for (int ell = 0; ell < n; ++ell) {
        const auto w = ell_spiderly_witness(t, {n, ell});
        REQUIRE(w.has_value() == brute_spiderly(t, ell));
        if (!w) {
          ++negatives;
          continue;
        }
        ++positives;
        // The witness itself satisfies the definition.
        const VertexSet u = w->spider;
        REQUIRE(u.contains(w->root));
        REQUIRE(oracle::brute_is_tree(t, u));
        const auto dist = distances_from(t, w->root);
        for (int v : t.vertices() - u) REQUIRE(2 * dist[v] <= n - ell - 2);
        VertexSet branch;
        for (int v : u) {
          if ((t.neighbors(v) & u).size() >= 3) branch.insert(v);
        }
        REQUIRE(branch.is_subset_of(VertexSet::single(w->root)));
      }
    }
  }
  CHECK(positives > 100);
  CHECK(negatives > 100);
}

TEST_CASE("full path counts") {
  for (int n = 3; n <= 12; ++n) {
    for (int ell = 0; 2 * ell + 1 <= n; ++ell) {
      CHECK(full_paths_count(path_graph(n), {n, ell}) == static_cast<std::uint64_t>(ell + 1));
    }
  }
  CHECK(full_paths_count(spider_graph({1, 1, 1, 1}), {5, 2}) == 6);
  CHECK(full_paths_count(spider_graph({3, 3, 2}), {9, 4}) == 7);
  CHECK(full_paths_count(empty_graph(4), {4, 3}) == 4);
  CHECK(error_code([] { full_paths_count(cycle_graph(5), {5, 2}); }) == Errc::NotATree);
  CHECK(error_code([] { full_paths_count(path_graph(5), {6, 2}); }) == Errc::InvalidParameter);

  for (int n = 2; n <= 9; ++n) {
    for (const Graph& f : fixtures::all_forests(n)) {
      for (int ell = 0; ell < n - 1; ++ell) REQUIRE(full_paths_count(f, {n, ell}) == brute_full_paths(f, n - ell));
    }
  }
}

TEST_CASE("spiderly trees have few full paths, n <= 10") {
  for (int n = 3; n <= 10; ++n) {
    for (const Graph& t : fixtures::all_trees(n)) {
      for (int ell = 1; 2 * ell + 1 <= n; ++ell) {
        if (!is_ell_spiderly(t, {n, ell})) continue;
        const std::uint64_t paths = full_paths_count(t, {n, ell});
        const bool exception = ell == 2 && are_isomorphic(t, spider_graph({1, 1, 1, 1}));
        if (exception) {
          CHECK(paths == 6);
        } else {
          REQUIRE(paths <= static_cast<std::uint64_t>(ell + 3));
        }
      }
    }
  }
}

TEST_CASE("marking process on a three-armed spider") {
  // z = 0 with three arms of length 4; the card drops the arm ends.
  const Graph f = spider_graph({4, 4, 4});
  const VertexSet ends = VertexSet::of({4, 8, 12});
  const VertexSet card = f.vertices() - ends;
  const MarkingReport r = run_marking(f, card, 2);
  CHECK(r.z == 0);
  CHECK(r.d_c == 3);
  CHECK(r.y == VertexSet::of({1, 5, 9}));
  CHECK(r.ell == 3);
  CHECK(r.center_count == 7);
  CHECK(r.bound() == 7);
  CHECK(r.at_bound());
  CHECK(r.marks == std::vector<std::pair<int, int>>{{2, 4}, {6, 8}, {10, 12}});
  CHECK(r.injective);
  CHECK(r.all_outside_marked);
  CHECK(r.is_tree);
}

TEST_CASE("marking process examples and errors") {
  // P_9 with the central 7 vertices as card: radius 3, j = 2.
  const Graph p9 = path_graph(9);
  const MarkingReport r = run_marking(p9, VertexSet::range(8) - VertexSet::single(0), 2);
  CHECK(r.z == 4);
  CHECK(r.d_c == 2);
  CHECK(r.center_count == 5);
  CHECK(r.bound_holds());
  CHECK(r.marks == std::vector<std::pair<int, int>>{{2, 0}, {6, 8}});

  // Card plus isolated vertices.
  const Graph f = disjoint_union(path_graph(5), empty_graph(3));
  const MarkingReport iso = run_marking(f, VertexSet::range(5), 1);
  CHECK(iso.center_count == 3);
  CHECK(iso.center_count <= 1 + iso.d_c);
  CHECK_FALSE(iso.is_tree);

  CHECK(error_code([&] { run_marking(p9, VertexSet::range(9), 0); }) == Errc::OutOfValidityRange);
  CHECK(error_code([&] { run_marking(p9, VertexSet::range(9), 2); }) == Errc::BadCard);
  CHECK(error_code([&] { run_marking(p9, VertexSet::of({0, 1, 3}), 1); }) == Errc::BadCard);
  CHECK(error_code([] { run_marking(cycle_graph(6), VertexSet::range(5), 1); }) == Errc::NotATree);
}

TEST_CASE("marking bound over every card of small forests") {
  int runs = 0;
  int equalities = 0;
  for (int n = 3; n <= 9; ++n) {
    for (const Graph& f : fixtures::all_forests(n)) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexSet card(mask);
        if (!oracle::brute_connected(f, card)) continue;
        const Graph h = induced_subgraph(f, card);
        int radius_within = n;
        for (int v = 0; v < h.order(); ++v) radius_within = std::min(radius_within, oracle::brute_eccentricity(h, v));
        const int j = radius_within - 1;
        if (j < 1) continue;
        for (const MarkingReport& r : run_marking_all_centers(f, card, j)) {
          REQUIRE(r.injective);
          REQUIRE(r.unmarked_centers.empty());
          REQUIRE(r.marks_outside_card);
          REQUIRE(r.bound_holds());
          if (r.at_bound()) {
            REQUIRE(r.is_tree);
            REQUIRE(r.all_outside_marked);
            ++equalities;
          }
          ++runs;
        }
      }
    }
  }
  CHECK(runs > 1000);
  CHECK(equalities > 10);
}
