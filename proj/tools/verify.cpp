#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "deckforge/error.hpp"
#include "deckforge/graph6.hpp"
#include "deckforge/parallel.hpp"
#include "deckforge/reconstruct.hpp"
#include "deckforge/search.hpp"
#include "deckforge/trees.hpp"
#include "deckforge/vines.hpp"

namespace deckforge::cli {

namespace {

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first_failure;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = describe();
  }
};

using Item = std::function<void(std::size_t, Tally&)>;

// Runs item(i) for every i and merges tallies in index order, so the first
// failure reported does not depend on scheduling.
SuiteRow run_row(const std::string& suite, const std::string& label, std::size_t count, int jobs, const Item& item) {
  std::vector<Tally> slots(count);
  parallel_for(count, jobs, [&](std::size_t i) { item(i, slots[i]); });
  SuiteRow row{suite, label, 0, 0, {}};
  for (const Tally& t : slots) {
    row.checked += t.checked;
    if (t.failed > 0 && row.failed == 0) row.first_failure = t.first_failure;
    row.failed += t.failed;
  }
  return row;
}

std::string label_n(int n) { return "n=" + std::to_string(n); }

std::string describe(const Graph& g, int ell) { return to_graph6(g) + " l=" + std::to_string(ell); }

std::vector<Graph> graphs_of(const std::vector<CanonicalCode>& codes) {
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(c.graph());
  return out;
}

// Cyclic candidates with acyclic decks over the main range, tagged by ell.
std::vector<std::pair<Graph, int>> acyclic_deck_hosts(int n) {
  std::vector<std::pair<Graph, int>> out;
  for (int ell = 1; 2 * ell + 1 <= n; ++ell) {
    for (const auto& code : enumerate_cyclic_candidates({n, ell})) {
      Graph g = code.graph();
      if (compute_deck(g, n - ell).is_acyclic()) out.emplace_back(std::move(g), ell);
    }
  }
  return out;
}

std::vector<SuiteRow> suite_deck(int max_n, int jobs) {
  std::vector<SuiteRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    const auto graphs = graphs_of(enumerate_graphs(n));
    rows.push_back(run_row("deck", label_n(n), graphs.size(), jobs, [&](std::size_t i, Tally& t) {
      const Graph& g = graphs[i];
      for (int j = 1; j <= n; ++j) {
        const Deck d = compute_deck(g, j);
        t.check(d.total() == binomial(n, j), [&] { return describe(g, n - j) + " total"; });
        if (j >= 2) {
          t.check(derive_subdeck(d) == compute_deck(g, j - 1), [&] { return describe(g, n - j) + " subdeck"; });
        }
      }
    }));
  }
  std::mt19937_64 rng(20240607);
  std::vector<std::pair<Graph, int>> sample;
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution(2, 12)(rng);
    std::bernoulli_distribution edge(std::uniform_real_distribution(0.1, 0.7)(rng));
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (edge(rng)) g.add_edge(u, v);
      }
    }
    sample.emplace_back(g, std::uniform_int_distribution(2, n)(rng));
  }
  rows.push_back(run_row("deck", "random n<=12", sample.size(), jobs, [&](std::size_t i, Tally& t) {
    const auto& [g, j] = sample[i];
    const Deck d = compute_deck(g, j);
    t.check(d.total() == binomial(g.order(), j), [&] { return describe(g, g.order() - j) + " total"; });
    t.check(derive_subdeck(d) == compute_deck(g, j - 1), [&] { return describe(g, g.order() - j) + " subdeck"; });
  }));
  return rows;
}

std::vector<SuiteRow> suite_kprop(int max_n, int jobs) {
  std::vector<SuiteRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    const auto forests = graphs_of(enumerate_forests(n));
    rows.push_back(run_row("kprop", label_n(n), forests.size(), jobs, [&](std::size_t i, Tally& t) {
      for (int ell = 1; 2 * ell + 1 <= n; ++ell) {
        const Deck d = compute_deck(forests[i], n - ell);
        t.check(k_from_deck(d) == k_of_graph(forests[i], {n, ell}), [&] { return describe(forests[i], ell); });
      }
    }));
  }
  for (int n = 3; n <= std::min(max_n, 9); ++n) {
    const auto hosts = acyclic_deck_hosts(n);
    rows.push_back(run_row("kprop", "cyclic " + label_n(n), hosts.size(), jobs, [&](std::size_t i, Tally& t) {
      const auto& [g, ell] = hosts[i];
      t.check(k_from_deck(compute_deck(g, n - ell)) == k_of_graph(g, {n, ell}), [&] { return describe(g, ell); });
    }));
  }
  return rows;
}

std::vector<SuiteRow> suite_degrees(int max_n, int jobs) {
  std::vector<SuiteRow> rows;
  for (int n = 3; n <= max_n; ++n) {
    const auto forests = graphs_of(enumerate_forests(n));
    rows.push_back(run_row("degrees", label_n(n), forests.size(), jobs, [&](std::size_t i, Tally& t) {
      for (int ell = 1; 2 * ell + 1 <= n; ++ell) {
        if (n == 5 && ell == 2) continue;
        const Deck d = compute_deck(forests[i], n - ell);
        t.check(degree_list_from_deck(d) == degree_sequence(forests[i]), [&] { return describe(forests[i], ell); });
      }
    }));
  }
  for (int n = 3; n <= std::min(max_n, 9); ++n) {
    const auto hosts = acyclic_deck_hosts(n);
    rows.push_back(run_row("degrees", "cyclic " + label_n(n), hosts.size(), jobs, [&](std::size_t i, Tally& t) {
      const auto& [g, ell] = hosts[i];
      if (n == 5 && ell == 2) return;
      t.check(degree_list_from_deck(compute_deck(g, n - ell)) == degree_sequence(g), [&] { return describe(g, ell); });
    }));
  }
  return rows;
}

// Maximal family members of g by exhaustive subset search, and all members.
struct MemberCounts {
  std::map<CanonicalCode, std::uint64_t> all;
  std::map<CanonicalCode, std::uint64_t> maximal;
};

MemberCounts exhaustive_members(const Graph& g, const Family& family) {
  std::vector<std::uint64_t> masks;
  std::vector<CanonicalCode> codes;
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const Graph h = induced_subgraph(g, VertexSet(mask));
    if (!family.contains(h)) continue;
    masks.push_back(mask);
    codes.push_back(canonical_form(h));
  }
  MemberCounts out;
  for (std::size_t a = 0; a < masks.size(); ++a) {
    ++out.all[codes[a]];
    bool is_maximal = true;
    for (std::size_t b = 0; b < masks.size() && is_maximal; ++b) {
      is_maximal = b == a || (masks[a] & ~masks[b]) != 0;
    }
    if (is_maximal) ++out.maximal[codes[a]];
  }
  return out;
}

std::vector<SuiteRow> suite_counting(int max_n, int jobs) {
  std::vector<SuiteRow> rows;
  for (int n = 3; n <= max_n; ++n) {
    const auto forests = graphs_of(enumerate_forests(n));
    rows.push_back(run_row("counting", label_n(n), forests.size(), jobs, [&](std::size_t i, Tally& t) {
      const Graph& f = forests[i];
      for (int ell = 1; 2 * ell + 1 <= n; ++ell) {
        const int c = n - ell;
        const Deck d = compute_deck(f, c);
        std::vector<Family> families{Family::vines(1), Family::connected()};
        const KValue k = k_of_graph(f, {n, ell});
        for (int j = 2; k.is_defined() && j <= k.value(); ++j) families.push_back(Family::vines(j));
        for (const Family& family : families) {
          const MemberCounts truth = exhaustive_members(f, family);
          Boundary boundary;
          for (const auto& [card, mult] : d.cards()) {
            if (family.contains(card.graph())) boundary[card] = 0;
          }
          for (const auto& [code, m] : truth.maximal) {
            if (code.order() >= c) boundary[code] = m;
          }
          bool ok = true;
          try {
            const CountingTable table = solve_maximal_counts(d, family, boundary);
            for (const auto& [code, m] : truth.maximal) ok = ok && table.m(code) == m;
            for (const auto& [code, entry] : table.entries) {
              const auto it = truth.maximal.find(code);
              ok = ok && entry.m_count == (it == truth.maximal.end() ? 0 : it->second);
              if (entry.s_count) {
                const auto s = truth.all.find(code);
                ok = ok && *entry.s_count == (s == truth.all.end() ? 0 : s->second);
              }
            }
          } catch (const Error&) {
            ok = false;
          }
          t.check(ok, [&] { return describe(f, ell) + " " + family.str(); });
        }
      }
    }));
  }
  return rows;
}

std::vector<SuiteRow> suite_girth_diam(int max_n, int jobs) {
  std::vector<SuiteRow> rows;
  for (int n = 3; n <= max_n; ++n) {
    const auto hosts = acyclic_deck_hosts(n);
    rows.push_back(run_row("girth-diam", label_n(n), hosts.size(), jobs, [&](std::size_t i, Tally& t) {
      const auto& [g, ell] = hosts[i];
      const Deck d = compute_deck(g, n - ell);
      const KValue k = k_from_deck(d);
      if (!k.is_defined()) {
        t.check(false, [&] { return describe(g, ell) + " k undefined"; });
        return;
      }
      t.check(girth(g).at_least(2 * k.value() + 4), [&] { return describe(g, ell) + " girth"; });
      int lo = -1;
      for (const auto& [card, mult] : d.cards()) {
        const Graph h = card.graph();
        if (!is_connected(h)) continue;
        const int diam = diameter(h);
        if (lo < 0 || diam < lo) lo = diam;
      }
      if (lo >= 0) {
        t.check(lo >= 2 * k.value() + 2 && lo <= 2 * k.value() + 3, [&] { return describe(g, ell) + " diameter"; });
      }
    }));
  }
  return rows;
}

std::vector<SuiteRow> suite_marking(int max_n, int jobs) {
  std::vector<SuiteRow> rows;
  for (int n = 3; n <= max_n; ++n) {
    const auto forests = graphs_of(enumerate_forests(n));
    rows.push_back(run_row("marking", label_n(n), forests.size(), jobs, [&](std::size_t i, Tally& t) {
      const Graph& f = forests[i];
      const std::uint64_t limit = std::uint64_t{1} << n;
      for (std::uint64_t mask = 1; mask < limit; ++mask) {
        const VertexSet card(mask);
        const Graph h = induced_subgraph(f, card);
        if (!is_connected(h)) continue;
        const int j = radius(h) - 1;
        if (j < 1) continue;
        for (const MarkingReport& r : run_marking_all_centers(f, card, j)) {
          const bool ok = r.injective && r.unmarked_centers.empty() && r.marks_outside_card && r.bound_holds() &&
                          (!r.at_bound() || (r.is_tree && r.all_outside_marked));
          t.check(ok, [&] {
            std::ostringstream s;
            s << to_graph6(f) << " card=" << mask << " j=" << j << " z=" << r.z;
            return s.str();
          });
        }
      }
    }));
  }
  return rows;
}

std::vector<SuiteRow> suite_spiderly(int max_n, int jobs) {
  const CanonicalCode exception = canonical_form(spider_graph({1, 1, 1, 1}));
  std::vector<SuiteRow> rows;
  for (int n = 3; n <= max_n; ++n) {
    const auto codes = enumerate_trees(n);
    rows.push_back(run_row("spiderly", label_n(n), codes.size(), jobs, [&](std::size_t i, Tally& t) {
      const Graph tree = codes[i].graph();
      for (int ell = 1; 2 * ell + 1 <= n; ++ell) {
        if (!is_ell_spiderly(tree, {n, ell})) continue;
        const std::uint64_t paths = full_paths_count(tree, {n, ell});
        if (ell == 2 && codes[i] == exception) {
          t.check(paths == 6, [&] { return describe(tree, ell) + " exception"; });
        } else {
          t.check(paths <= static_cast<std::uint64_t>(ell + 3), [&] { return describe(tree, ell); });
        }
      }
    }));
  }
  return rows;
}

std::vector<SuiteRow> suite_sharpness(int max_n, int jobs) {
  std::vector<std::pair<std::string, int>> cases;
  for (int ell = 2; ell <= 5; ++ell) cases.emplace_back("spinoza_west", ell);
  for (int ell = 2; ell <= 5; ++ell) cases.emplace_back("nydl", ell);
  for (int ell = 2; ell <= 5; ++ell) cases.emplace_back("split_paths", ell);
  cases.emplace_back("two_cycles", 5);
  for (int ell : {4, 6}) cases.emplace_back("theta_isolated", ell);
  for (int ell : {3, 5}) cases.emplace_back("chorded_cycle", ell);

  std::vector<SuiteRow> rows;
  for (const auto& [name, ell] : cases) {
    const NamedConstruction c = named_counterexample(name, ell);
    if (max_n > 0 && c.graphs.front().order() > max_n) continue;
    rows.push_back(run_row("sharpness", name + " l=" + std::to_string(ell), 1, jobs, [&](std::size_t, Tally& t) {
      if (c.graphs.size() == 2) {
        const Graph& a = c.graphs[0];
        const Graph& b = c.graphs[1];
        t.check(!are_isomorphic(a, b), [&] { return std::string("isomorphic pair"); });
        t.check(decks_equal(compute_deck(a, c.card_size), compute_deck(b, c.card_size)),
                [&] { return std::string("decks differ"); });
      } else {
        const Graph& g = c.graphs[0];
        t.check(compute_deck(g, c.card_size).is_acyclic(), [&] { return std::string("deck not acyclic"); });
        t.check(!is_connected(g), [&] { return std::string("connected"); });
        t.check(!is_forest(g), [&] { return std::string("acyclic graph"); });
      }
    }));
  }
  return rows;
}

std::vector<SuiteRow> suite_ambiguous(int max_n, int jobs) {
  std::vector<SuiteRow> rows;
  SearchOptions options;
  options.jobs = jobs;
  for (int n = 3; n <= max_n; ++n) {
    for (int ell = 1; 2 * ell + 1 <= n; ++ell) {
      const SearchReport r = find_ambiguous({n, ell}, options);
      const std::size_t expected = (n == 5 && ell == 2) ? 1 : 0;
      SuiteRow row{"ambiguous", label_n(n) + " l=" + std::to_string(ell), 1, 0, {}};
      if (r.witnesses.size() != expected) {
        row.failed = 1;
        row.first_failure = std::to_string(r.witnesses.size()) + " ambiguous pairs";
      }
      rows.push_back(row);
    }
  }
  return rows;
}

using SuiteFn = std::vector<SuiteRow> (*)(int, int);

const std::vector<std::tuple<std::string, SuiteFn, int>>& registry() {
  static const std::vector<std::tuple<std::string, SuiteFn, int>> suites{
      {"deck", suite_deck, 7},         {"kprop", suite_kprop, 10},
      {"degrees", suite_degrees, 10},  {"counting", suite_counting, 9},
      {"girth-diam", suite_girth_diam, 9}, {"marking", suite_marking, 10},
      {"spiderly", suite_spiderly, 12}, {"sharpness", suite_sharpness, 0},
      {"ambiguous", suite_ambiguous, 9},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn, def] : registry()) names.push_back(name);
  names.push_back("all");
  return names;
}

std::vector<SuiteRow> run_suite(const std::string& name, int max_vertices, int jobs) {
  std::vector<SuiteRow> rows;
  for (const auto& [suite, fn, def] : registry()) {
    if (name != "all" && name != suite) continue;
    const int n = (name == "all" || max_vertices <= 0) ? def : max_vertices;
    auto part = fn(n, jobs);
    rows.insert(rows.end(), part.begin(), part.end());
    if (name != "all") return rows;
  }
  if (name != "all") throw Error(Errc::InvalidParameter, "unknown suite '" + name + "'");
  return rows;
}

}  // namespace deckforge::cli
