#include "deckforge/search.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <set>

#include "deckforge/parallel.hpp"

namespace deckforge {

SearchBudget SearchBudget::uniform(int vertices) {
  SearchBudget b;
  b.max_tree_vertices = vertices;
  b.max_forest_vertices = vertices;
  b.max_cyclic_vertices = vertices;
  b.max_graph_vertices = std::min(vertices, b.max_graph_vertices);
  return b;
}

namespace {

void check_budget(int n, int cap, const char* what) {
  if (n < 1 || n > kMaxVertices) throw Error(Errc::InvalidParameter, "vertex count out of range");
  if (n > cap) {
    throw Error(Errc::BudgetExceeded, std::string(what) + " on " + std::to_string(n) + " vertices exceed the budget of " +
                                          std::to_string(cap));
  }
}

Graph with_extra_vertex(const Graph& g) {
  Graph h(g.order() + 1);
  for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
  return h;
}

std::vector<CanonicalCode> sorted(const std::set<CanonicalCode>& codes) { return {codes.begin(), codes.end()}; }

// Grows classes one vertex at a time; `extend` lists the children of a graph.
template <typename Extend>
std::vector<CanonicalCode> grow_classes(int n, Extend&& extend) {
  std::set<CanonicalCode> level{canonical_form(Graph(1))};
  for (int m = 1; m < n; ++m) {
    std::set<CanonicalCode> next;
    for (const CanonicalCode& code : level) {
      for (const Graph& child : extend(code.graph())) next.insert(canonical_form(child));
    }
    level = std::move(next);
  }
  return sorted(level);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Serialized decks, one per graph, computed in parallel.
std::vector<std::string> deck_texts(const std::vector<CanonicalCode>& graphs, int card_size, int jobs) {
  std::vector<std::string> out(graphs.size());
  parallel_for(graphs.size(), jobs,
               [&](std::size_t i) { out[i] = serialize_deck(compute_deck(graphs[i].graph(), card_size)); });
  return out;
}

}  // namespace

std::vector<CanonicalCode> enumerate_trees(int n, const SearchBudget& budget) {
  check_budget(n, budget.max_tree_vertices, "trees");
  return grow_classes(n, [](const Graph& t) {
    std::vector<Graph> children;
    for (int v = 0; v < t.order(); ++v) {
      Graph h = with_extra_vertex(t);
      h.add_edge(v, t.order());
      children.push_back(std::move(h));
    }
    return children;
  });
}

std::vector<CanonicalCode> enumerate_forests(int n, const SearchBudget& budget) {
  check_budget(n, budget.max_forest_vertices, "forests");
  // Every forest arises from a smaller one by adding a leaf or an isolated vertex.
  return grow_classes(n, [](const Graph& f) {
    std::vector<Graph> children{with_extra_vertex(f)};
    for (int v = 0; v < f.order(); ++v) {
      Graph h = with_extra_vertex(f);
      h.add_edge(v, f.order());
      children.push_back(std::move(h));
    }
    return children;
  });
}

std::vector<CanonicalCode> enumerate_graphs(int n, const SearchBudget& budget) {
  check_budget(n, budget.max_graph_vertices, "graphs");
  return grow_classes(n, [](const Graph& g) {
    std::vector<Graph> children;
    const int m = g.order();
    for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << m); ++nb) {
      Graph h = with_extra_vertex(g);
      for (int v : VertexSet(nb)) h.add_edge(v, m);
      children.push_back(std::move(h));
    }
    return children;
  });
}

std::vector<CanonicalCode> enumerate_cyclic_candidates(DeckParams params, const SearchBudget& budget, int max_edges) {
  const int n = params.n;
  check_budget(n, budget.max_cyclic_vertices, "cyclic candidates");
  if (max_edges < 0) max_edges = n - 1;
  const int min_girth = std::max(3, params.card_size() + 1);
  std::set<CanonicalCode> out;
  for (int g = min_girth; g <= n && g <= max_edges; ++g) {
    std::set<CanonicalCode> level{canonical_form(disjoint_union(cycle_graph(g), empty_graph(n - g)))};
    for (int edges = g;; ++edges) {
      out.insert(level.begin(), level.end());
      if (edges == max_edges) break;
      std::set<CanonicalCode> next;
      for (const CanonicalCode& code : level) {
        const Graph h = code.graph();
        for (int u = 0; u < n; ++u) {
          const std::vector<int> dist = distances_from(h, u);
          for (int v = u + 1; v < n; ++v) {
            // The new edge closes a cycle of length dist + 1.
            if (h.adjacent(u, v) || (dist[v] >= 0 && dist[v] + 1 < min_girth)) continue;
            Graph child = h;
            child.add_edge(u, v);
            next.insert(canonical_form(child));
          }
        }
      }
      if (next.empty()) break;
      level = std::move(next);
    }
  }
  return sorted(out);
}

SearchReport find_ambiguous(DeckParams params, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int n = params.n;
  const int c = params.card_size();
  if (params.ell < 0 || c < 1) throw Error(Errc::InvalidParameter, "card size out of range");
  SearchReport r;
  r.kind = "ambiguous";
  r.n = n;
  r.card_size = c;

  const std::vector<CanonicalCode> forests = enumerate_forests(n, options.budget);
  const std::vector<CanonicalCode> cyclic = enumerate_cyclic_candidates(params, options.budget);
  r.stages.emplace_back("forests", forests.size());
  r.stages.emplace_back("cyclic candidates", cyclic.size());

  // Edge counts always agree between graphs with equal decks (c >= 2); degree
  // lists agree only where the deck determines them.
  const bool use_degrees = options.degree_prefilter && params.in_main_range() && !params.is_excluded_case();
  auto key = [&](const CanonicalCode& code) {
    const Graph g = code.graph();
    std::vector<int> k{c >= 2 ? g.edge_count() : 0};
    if (use_degrees) {
      const std::vector<int> degrees = degree_sequence(g);
      k.insert(k.end(), degrees.begin(), degrees.end());
    }
    return k;
  };
  std::set<std::vector<int>> forest_keys;
  for (const auto& f : forests) forest_keys.insert(key(f));
  std::set<std::vector<int>> cyclic_keys;
  std::vector<CanonicalCode> cyclic_kept;
  for (const auto& h : cyclic) {
    auto k = key(h);
    if (forest_keys.contains(k)) {
      cyclic_kept.push_back(h);
      cyclic_keys.insert(std::move(k));
    }
  }
  std::vector<CanonicalCode> forests_kept;
  for (const auto& f : forests) {
    if (cyclic_keys.contains(key(f))) forests_kept.push_back(f);
  }
  r.stages.emplace_back(use_degrees ? "forests after edge/degree filter" : "forests after edge filter",
                        forests_kept.size());
  r.stages.emplace_back(use_degrees ? "cyclic after edge/degree filter" : "cyclic after edge filter",
                        cyclic_kept.size());

  const std::vector<std::string> forest_decks = deck_texts(forests_kept, c, options.jobs);
  const std::vector<std::string> cyclic_decks = deck_texts(cyclic_kept, c, options.jobs);
  std::map<std::string, std::vector<std::size_t>> by_deck;
  for (std::size_t i = 0; i < forests_kept.size(); ++i) by_deck[forest_decks[i]].push_back(i);
  r.stages.emplace_back("decks computed", forest_decks.size() + cyclic_decks.size());

  for (std::size_t h = 0; h < cyclic_kept.size(); ++h) {
    auto it = by_deck.find(cyclic_decks[h]);
    if (it == by_deck.end()) continue;
    for (std::size_t f : it->second) {
      if (!decks_equal(compute_deck(forests_kept[f].graph(), c), compute_deck(cyclic_kept[h].graph(), c))) {
        throw Error(Errc::InconsistentInput, "deck fingerprint collision without deck equality");
      }
      r.witnesses.emplace_back(forests_kept[f], cyclic_kept[h]);
    }
  }
  std::sort(r.witnesses.begin(), r.witnesses.end());
  r.stages.emplace_back("ambiguous pairs", r.witnesses.size());
  r.seconds = seconds_since(start);
  return r;
}

SearchReport find_equal_deck_tree_pairs(int n, int card_size, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (card_size < 1 || card_size > n) throw Error(Errc::InvalidCardSize, "card size out of range");
  SearchReport r;
  r.kind = "tree-pairs";
  r.n = n;
  r.card_size = card_size;
  const std::vector<CanonicalCode> trees = enumerate_trees(n, options.budget);
  r.stages.emplace_back("trees", trees.size());
  const std::vector<std::string> decks = deck_texts(trees, card_size, options.jobs);
  std::map<std::string, std::vector<std::size_t>> by_deck;
  for (std::size_t i = 0; i < trees.size(); ++i) by_deck[decks[i]].push_back(i);
  r.stages.emplace_back("distinct decks", by_deck.size());
  for (const auto& [text, group] : by_deck) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        const CanonicalCode& x = trees[group[a]];
        const CanonicalCode& y = trees[group[b]];
        if (!decks_equal(compute_deck(x.graph(), card_size), compute_deck(y.graph(), card_size))) {
          throw Error(Errc::InconsistentInput, "deck fingerprint collision without deck equality");
        }
        r.witnesses.emplace_back(std::min(x, y), std::max(x, y));
      }
    }
  }
  std::sort(r.witnesses.begin(), r.witnesses.end());
  r.stages.emplace_back("equal-deck pairs", r.witnesses.size());
  r.seconds = seconds_since(start);
  return r;
}

void write_report(std::ostream& out, const SearchReport& r, bool with_time) {
  out << "search " << r.kind << " n=" << r.n << " j=" << r.card_size << '\n';
  for (const auto& [stage, count] : r.stages) out << "stage " << stage << ": " << count << '\n';
  for (const auto& [a, b] : r.witnesses) out << "witness " << a.str() << ' ' << b.str() << '\n';
  out << r.witnesses.size() << (r.kind == "ambiguous" ? " ambiguous pairs" : " equal-deck pairs") << '\n';
  if (with_time) out << "time " << std::fixed << std::setprecision(3) << r.seconds << " s\n";
}

std::vector<std::string> counterexample_names() {
  return {"spinoza_west", "nydl", "split_paths", "theta_isolated", "chorded_cycle", "two_cycles"};
}

namespace {

Graph sum(const Graph& a, const Graph& b) { return disjoint_union(a, b); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InvalidParameter, what);
}

}  // namespace

NamedConstruction named_counterexample(const std::string& name, int ell) {
  NamedConstruction out{name, ell, ell, {}};
  if (name == "spinoza_west") {
    require(ell >= 2, "spinoza_west needs ell >= 2");
    out.graphs = {path_graph(2 * ell), sum(cycle_graph(ell + 1), path_graph(ell - 1))};
  } else if (name == "nydl") {
    require(ell >= 2, "nydl needs ell >= 2");
    const int len = 2 * ell - 1;
    const int mid = ell - 1;
    Graph at_center = with_extra_vertex(path_graph(len));
    at_center.add_edge(mid, len);
    Graph beside = with_extra_vertex(path_graph(len));
    beside.add_edge(mid - 1, len);
    out.graphs = {at_center, beside};
  } else if (name == "split_paths") {
    require(ell >= 2, "split_paths needs ell >= 2");
    out.graphs = {sum(path_graph(ell), path_graph(ell)), sum(path_graph(ell + 1), path_graph(ell - 1))};
  } else if (name == "theta_isolated") {
    require(ell >= 4 && ell % 2 == 0, "theta_isolated needs even ell >= 4");
    const int half = ell / 2;
    // Hubs 0 and 1, four paths with half - 1 internal vertices, then K_1.
    Graph g(2 * ell - 1);
    int next = 2;
    for (int p = 0; p < 4; ++p) {
      int prev = 0;
      for (int i = 0; i < half - 1; ++i) {
        g.add_edge(prev, next);
        prev = next++;
      }
      g.add_edge(prev, 1);
    }
    out.card_size = ell - 1;
    out.graphs = {g};
  } else if (name == "chorded_cycle") {
    require(ell >= 3 && ell % 2 == 1, "chorded_cycle needs odd ell >= 3");
    const int len = 2 * ell - 2;
    const int half = (ell - 1) / 2;
    Graph g = with_extra_vertex(cycle_graph(len));
    g.add_edge(0, ell - 1);
    g.add_edge(half, half + ell - 1);
    out.card_size = ell - 1;
    out.graphs = {g};
  } else if (name == "two_cycles") {
    require(ell >= 4, "two_cycles needs ell >= 4");
    out.card_size = ell - 2;
    out.graphs = {cycle_graph(2 * ell - 2), sum(cycle_graph(ell - 1), cycle_graph(ell - 1))};
  } else {
    throw Error(Errc::InvalidParameter, "unknown construction '" + name + "'");
  }
  return out;
}

const char* to_string(DeckClass c) {
  switch (c) {
    case DeckClass::AllAcyclic:
      return "AllAcyclic";
    case DeckClass::AllNonacyclic:
      return "AllNonacyclic";
    case DeckClass::Ambiguous:
      return "Ambiguous";
    case DeckClass::NoReconstruction:
      break;
  }
  return "NoReconstruction";
}

Classification classify_deck(const Deck& d, const SearchOptions& options) {
  const int n = d.n();
  const int c = d.card_size();
  Classification out;
  int edges = -1;
  if (c >= 2) {
    try {
      edges = static_cast<int>(edge_count_from_deck(d));
    } catch (const Error& e) {
      if (e.code() != Errc::InconsistentDeck) throw;
      return out;
    }
  }
  auto matches = [&](const std::vector<CanonicalCode>& pool, bool want_forest) {
    std::vector<CanonicalCode> kept;
    for (const auto& code : pool) {
      const Graph g = code.graph();
      if (edges >= 0 && g.edge_count() != edges) continue;
      if (is_forest(g) == want_forest) kept.push_back(code);
    }
    const std::vector<std::string> decks = deck_texts(kept, c, options.jobs);
    const std::string target = serialize_deck(d);
    std::vector<CanonicalCode> hits;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (decks[i] == target) hits.push_back(kept[i]);
    }
    return hits;
  };

  if (d.is_acyclic() && c >= 2) {
    out.acyclic = matches(enumerate_forests(n, options.budget), true);
    // A cycle of length at most c would show up inside some card.
    const int cap = edges >= 0 ? edges : n * (n - 1) / 2;
    out.cyclic = matches(enumerate_cyclic_candidates(d.params(), options.budget, cap), false);
  } else {
    const std::vector<CanonicalCode> all = enumerate_graphs(n, options.budget);
    if (d.is_acyclic()) out.acyclic = matches(all, true);
    out.cyclic = matches(all, false);
  }

  if (out.acyclic.empty() && out.cyclic.empty()) {
    out.verdict = DeckClass::NoReconstruction;
  } else if (out.cyclic.empty()) {
    out.verdict = DeckClass::AllAcyclic;
  } else if (out.acyclic.empty()) {
    out.verdict = DeckClass::AllNonacyclic;
  } else {
    out.verdict = DeckClass::Ambiguous;
  }
  return out;
}

}  // namespace deckforge
