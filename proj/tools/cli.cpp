#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "deck_cache.hpp"
#include "deckforge/error.hpp"
#include "deckforge/graph6.hpp"
#include "deckforge/reconstruct.hpp"
#include "deckforge/search.hpp"
#include "json.hpp"
#include "verify.hpp"

namespace deckforge::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::optional<int> n;
  std::optional<int> ell;
  std::optional<int> card_size;
  std::vector<std::string> inputs;
  std::vector<std::string> graphs;
  std::string format = "text";
  int jobs = 1;
  std::string cache_dir;
  std::optional<int> budget_vertices;
  std::string suite = "all";
  std::string name;
  bool list = false;
  bool timing = false;
};

class Runner {
 public:
  Runner(const RunConfig& cfg, std::istream& in, std::ostream& out)
      : cfg_(cfg),
        in_(in),
        out_(out),
        cache_(cfg.cache_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(cfg.cache_dir)) {}

  int deck();
  int compare();
  int degrees();
  int classify();
  int search();
  int tree_pairs();
  int counterexample();
  int verify();

 private:
  bool json() const { return cfg_.format == "json"; }
  void emit(const Json& j) { out_ << j.dump(2) << '\n'; }

  std::vector<Graph> read_graphs();
  Deck read_one_deck();
  int card_size_for(int order) const;
  DeckParams params() const;
  SearchOptions search_options() const;

  const RunConfig& cfg_;
  std::istream& in_;
  std::ostream& out_;
  DeckCache cache_;
};

template <typename Fn>
auto with_input(const std::string& path, std::istream& stdin_stream, Fn&& fn) {
  if (path == "-") return fn(stdin_stream);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return fn(file);
}

std::vector<Graph> Runner::read_graphs() {
  std::vector<Graph> out;
  for (const auto& path : cfg_.inputs) {
    auto part = with_input(path, in_, [](std::istream& s) { return read_graph6_stream(s); });
    out.insert(out.end(), part.begin(), part.end());
  }
  for (const auto& text : cfg_.graphs) out.push_back(from_graph6(text));
  if (out.empty()) throw UsageError("no input graphs (use --input or --graph)");
  return out;
}

Deck Runner::read_one_deck() {
  if (cfg_.inputs.size() != 1) throw UsageError("expected exactly one --input deck file");
  return with_input(cfg_.inputs.front(), in_, [](std::istream& s) { return read_deck(s); });
}

int Runner::card_size_for(int order) const {
  if (cfg_.n && *cfg_.n != order) {
    throw UsageError("--n " + std::to_string(*cfg_.n) + " does not match a graph of order " + std::to_string(order));
  }
  if (cfg_.card_size) {
    if (cfg_.ell && order - *cfg_.ell != *cfg_.card_size) throw UsageError("--ell and --card-size disagree");
    return *cfg_.card_size;
  }
  if (cfg_.ell) return order - *cfg_.ell;
  throw UsageError("one of --card-size or --ell is required");
}

DeckParams Runner::params() const {
  if (!cfg_.n) throw UsageError("--n is required");
  return {*cfg_.n, *cfg_.n - card_size_for(*cfg_.n)};
}

SearchOptions Runner::search_options() const {
  SearchOptions o;
  o.jobs = cfg_.jobs;
  if (cfg_.budget_vertices) o.budget = SearchBudget::uniform(*cfg_.budget_vertices);
  return o;
}

Json deck_json(const Deck& d) {
  Json cards = Json::array();
  for (const auto& [code, mult] : d.cards()) cards.push_back({{"code", code.str()}, {"multiplicity", mult}});
  return {{"n", d.n()}, {"card_size", d.card_size()}, {"cards", cards}};
}

Json codes_json(const std::vector<CanonicalCode>& codes) {
  Json out = Json::array();
  for (const auto& c : codes) out.push_back(c.str());
  return out;
}

int Runner::deck() {
  Json decks = Json::array();
  for (const Graph& g : read_graphs()) {
    const Deck d = cache_.deck(g, card_size_for(g.order()));
    if (json()) {
      decks.push_back(deck_json(d));
    } else {
      write_deck(out_, d);
    }
  }
  if (json()) emit({{"decks", decks}});
  return kSuccess;
}

int Runner::compare() {
  const auto graphs = read_graphs();
  if (graphs.size() != 2) throw UsageError("compare needs exactly two graphs");
  if (graphs[0].order() != graphs[1].order()) throw UsageError("compare needs graphs of equal order");
  const int j = card_size_for(graphs[0].order());
  const bool equal = decks_equal(cache_.deck(graphs[0], j), cache_.deck(graphs[1], j));
  const char* verdict = equal ? "EQUAL" : "DIFFERENT";
  if (json()) {
    emit({{"n", graphs[0].order()}, {"card_size", j}, {"verdict", verdict}});
  } else {
    out_ << verdict << '\n';
  }
  return kSuccess;
}

int Runner::degrees() {
  const Deck d = read_one_deck();
  const DegreeList list = degree_list_from_deck(d);
  if (json()) {
    emit({{"n", d.n()}, {"card_size", d.card_size()}, {"degrees", list}});
  } else {
    out_ << "degrees";
    for (int x : list) out_ << ' ' << x;
    out_ << '\n';
  }
  return kSuccess;
}

int Runner::classify() {
  const Deck d = read_one_deck();
  const Classification c = classify_deck(d, search_options());
  if (json()) {
    emit({{"n", d.n()},
          {"card_size", d.card_size()},
          {"verdict", to_string(c.verdict)},
          {"acyclic", codes_json(c.acyclic)},
          {"cyclic", codes_json(c.cyclic)}});
  } else {
    out_ << "verdict " << to_string(c.verdict) << '\n';
    for (const auto& code : c.acyclic) out_ << "acyclic " << code.str() << '\n';
    for (const auto& code : c.cyclic) out_ << "cyclic " << code.str() << '\n';
  }
  return kSuccess;
}

Json report_json(const SearchReport& r, bool timing) {
  Json stages = Json::array();
  for (const auto& [name, count] : r.stages) stages.push_back({{"stage", name}, {"count", count}});
  Json witnesses = Json::array();
  for (const auto& [a, b] : r.witnesses) witnesses.push_back({a.str(), b.str()});
  Json out{{"kind", r.kind},          {"n", r.n},
           {"card_size", r.card_size}, {"stages", stages},
           {"witnesses", witnesses},   {"pairs", r.witnesses.size()}};
  if (timing) out["seconds"] = r.seconds;
  return out;
}

int Runner::search() {
  const SearchReport r = find_ambiguous(params(), search_options());
  if (json()) {
    emit(report_json(r, cfg_.timing));
  } else {
    write_report(out_, r, cfg_.timing);
  }
  return kSuccess;
}

int Runner::tree_pairs() {
  const DeckParams p = params();
  const SearchReport r = find_equal_deck_tree_pairs(p.n, p.card_size(), search_options());
  if (json()) {
    emit(report_json(r, cfg_.timing));
  } else {
    write_report(out_, r, cfg_.timing);
  }
  return kSuccess;
}

int Runner::counterexample() {
  if (cfg_.list) {
    const auto names = counterexample_names();
    if (json()) {
      emit({{"names", names}});
    } else {
      for (const auto& name : names) out_ << name << '\n';
    }
    return kSuccess;
  }
  if (cfg_.name.empty()) throw UsageError("--name is required");
  if (!cfg_.ell) throw UsageError("--ell is required");
  const NamedConstruction c = named_counterexample(cfg_.name, *cfg_.ell);

  std::vector<std::pair<std::string, bool>> checks;
  if (c.graphs.size() == 2) {
    const Deck a = cache_.deck(c.graphs[0], c.card_size);
    const Deck b = cache_.deck(c.graphs[1], c.card_size);
    checks.emplace_back("non-isomorphic", !are_isomorphic(c.graphs[0], c.graphs[1]));
    checks.emplace_back("decks equal", decks_equal(a, b));
  } else {
    const Graph& g = c.graphs[0];
    checks.emplace_back("deck acyclic", cache_.deck(g, c.card_size).is_acyclic());
    checks.emplace_back("has a cycle", !is_forest(g));
    checks.emplace_back("disconnected", !is_connected(g));
  }
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& p) { return p.second; });

  if (json()) {
    Json graphs = Json::array();
    for (const Graph& g : c.graphs) graphs.push_back(to_graph6(g));
    Json verification = Json::object();
    for (const auto& [what, pass] : checks) verification[what] = pass;
    emit({{"name", c.name},
          {"ell", c.ell},
          {"card_size", c.card_size},
          {"graphs", graphs},
          {"verification", verification},
          {"verified", ok}});
  } else {
    out_ << "construction " << c.name << " ell=" << c.ell << " card_size=" << c.card_size << '\n';
    for (const Graph& g : c.graphs) out_ << "graph " << to_graph6(g) << '\n';
    for (const auto& [what, pass] : checks) out_ << what << ": " << (pass ? "yes" : "no") << '\n';
    out_ << (ok ? "VERIFIED" : "FAILED") << '\n';
  }
  return ok ? kSuccess : kVerificationFailed;
}

int Runner::verify() {
  const auto rows = run_suite(cfg_.suite, cfg_.budget_vertices.value_or(0), cfg_.jobs);
  const bool ok = std::none_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.failed > 0; });
  if (json()) {
    Json list = Json::array();
    for (const auto& r : rows) {
      Json row{{"suite", r.suite}, {"case", r.label}, {"checked", r.checked}, {"failed", r.failed}};
      if (r.failed > 0) row["first_failure"] = r.first_failure;
      list.push_back(row);
    }
    emit({{"suite", cfg_.suite}, {"rows", list}, {"passed", ok}});
  } else {
    auto pad = [](std::string s, std::size_t w) {
      s.resize(std::max(s.size(), w), ' ');
      return s;
    };
    out_ << pad("suite", 12) << pad("case", 22) << pad("checked", 10) << pad("failed", 8) << "status\n";
    for (const auto& r : rows) {
      out_ << pad(r.suite, 12) << pad(r.label, 22) << pad(std::to_string(r.checked), 10)
           << pad(std::to_string(r.failed), 8) << (r.failed == 0 ? "PASS" : "FAIL") << '\n';
      if (r.failed > 0) out_ << "  first failure: " << r.first_failure << '\n';
    }
    out_ << (ok ? "all rows passed" : "verification failed") << '\n';
  }
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph decks, reconstruction from small cards and acyclicity recognition", "deckforge"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all");
  RunConfig cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_sizes = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Number of vertices")->check(CLI::Range(1, 64));
    sub->add_option("--ell", cfg.ell, "Deleted vertices per card")->check(CLI::NonNegativeNumber);
    sub->add_option("--card-size", cfg.card_size, "Vertices per card")->check(CLI::PositiveNumber);
  };
  auto add_graph_input = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.inputs, "graph6 file, '-' for stdin (repeatable)");
    sub->add_option("--graph", cfg.graphs, "Inline graph6 string (repeatable)");
    sub->add_option("--cache-dir", cfg.cache_dir, "Deck cache directory")->envname("DECKFORGE_CACHE");
  };
  auto add_deck_input = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.inputs, "Deck file, '-' for stdin")->required();
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    sub->add_option("--budget-vertices", cfg.budget_vertices, "Largest order any enumeration may reach")
        ->check(CLI::PositiveNumber);
  };

  auto* deck = app.add_subcommand("deck", "Write the deck of each input graph");
  add_graph_input(deck);
  add_sizes(deck);
  add_format(deck);

  auto* compare = app.add_subcommand("compare", "Compare the decks of two graphs");
  add_graph_input(compare);
  add_sizes(compare);
  add_format(compare);

  auto* degrees = app.add_subcommand("degrees", "Degree list from an acyclic deck");
  add_deck_input(degrees);
  add_format(degrees);

  auto* classify = app.add_subcommand("classify", "All reconstructions of a deck, split by acyclicity");
  add_deck_input(classify);
  add_search(classify);
  add_format(classify);

  auto* search = app.add_subcommand("search", "Acyclic/nonacyclic pairs sharing a deck");
  add_sizes(search);
  add_search(search);
  add_format(search);
  search->add_flag("--timing", cfg.timing, "Include wall time in the report");

  auto* pairs = app.add_subcommand("tree-pairs", "Non-isomorphic trees sharing a deck");
  add_sizes(pairs);
  add_search(pairs);
  add_format(pairs);
  pairs->add_flag("--timing", cfg.timing, "Include wall time in the report");

  auto* counter = app.add_subcommand("counterexample", "Build and check a named construction");
  counter->add_option("--name", cfg.name, "Construction name");
  counter->add_option("--ell", cfg.ell, "Construction parameter");
  counter->add_flag("--list", cfg.list, "List construction names");
  counter->add_option("--cache-dir", cfg.cache_dir, "Deck cache directory")->envname("DECKFORGE_CACHE");
  add_format(counter);

  auto* verify = app.add_subcommand("verify", "Run an invariant suite and print a pass/fail table");
  verify->add_option("--suite", cfg.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  add_search(verify);
  add_format(verify);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  Runner runner(cfg, in, out);
  try {
    if (*deck) return runner.deck();
    if (*compare) return runner.compare();
    if (*degrees) return runner.degrees();
    if (*classify) return runner.classify();
    if (*search) return runner.search();
    if (*pairs) return runner.tree_pairs();
    if (*counter) return runner.counterexample();
    return runner.verify();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::BudgetExceeded ? kBudgetExceeded : kUsageError;
  }
}

}  // namespace deckforge::cli
