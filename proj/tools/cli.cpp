#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "indopt/canonical.hpp"
#include "indopt/constructions.hpp"
#include "indopt/dominance.hpp"
#include "indopt/graph_io.hpp"
#include "indopt/indpoly.hpp"
#include "indopt/kindpoly.hpp"
#include "indopt/report.hpp"
#include "indopt/search.hpp"
#include "indopt/verify.hpp"

namespace indopt::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  int n = 0, m = 0, k = 2, l = 0, a = 0, b = 0, y = 0, z = 0;
  std::string deleted;
  std::string objective = "greatest";
  std::string construction;
  std::vector<std::string> graph6;
  std::string graph6_file;
  std::string edgelist_file;
  std::string edge;
  bool dedup = false;
  int jobs = 1;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 42;
  std::string format = "text";
  std::string out;
  bool timing = false;
  std::string theorem;
  int trials = 200;
  int max_n = 10;

  std::map<const CLI::App*, std::map<std::string, CLI::Option*>> per_command;
  std::map<std::string, CLI::Option*> opts;  // the active command's options
  bool given(const std::string& name) const {
    auto it = opts.find(name);
    return it != opts.end() && it->second->count() > 0;
  }
};

void add_common(CLI::App* app, Config& c) {
  auto& o = c.per_command[app];
  o["n"] = app->add_option("--n", c.n, "Order");
  o["m"] = app->add_option("--m", c.m, "Size (number of edges)");
  o["k"] = app->add_option("--k", c.k, "Clique parameter of I_k (default 2)");
  o["l"] = app->add_option("--l", c.l, "Clique order l (thm5)");
  o["a"] = app->add_option("--a", c.a, "Clique order a (thm3-fs)");
  o["b"] = app->add_option("--b", c.b, "Clique order b (thm3-fs)");
  o["deleted"] = app->add_option("--deleted", c.deleted,
                                 "thm3-ls deletions: a count, or edges like 0-1,0-2");
  o["construction"] = app->add_option("--construction", c.construction, "Construction family tag");
  o["graph6"] = app->add_option("--graph6", c.graph6, "graph6 string (repeatable)");
  o["graph6-file"] = app->add_option("--graph6-file", c.graph6_file, "File with one graph6 per line");
  o["edgelist-file"] = app->add_option("--edgelist-file", c.edgelist_file, "Edge list file");
  o["edge"] = app->add_option("--edge", c.edge, "Edge u-v to move (edge-move)");
  o["y"] = app->add_option("--y", c.y, "First isolated vertex (edge-move)");
  o["z"] = app->add_option("--z", c.z, "Second isolated vertex (edge-move)");
  o["seed"] = app->add_option("--seed", c.seed, "Random seed (default 42)");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_option("--out", c.out, "Output file (search: output directory)");
  app->add_flag("--timing", c.timing, "Include wall-clock times in the output");
}

void add_search_options(CLI::App* app, Config& c) {
  app->add_option("--objective", c.objective, "greatest or least")
      ->check(CLI::IsMember({"greatest", "least", "GREATEST", "LEAST"}));
  app->add_flag("--dedup", c.dedup, "Keep one graph per isomorphism class");
  app->add_option("--jobs", c.jobs, "Worker threads (default 1)")->check(CLI::Range(1, 256));
  app->add_option("--budget", c.budget, "Maximum labelled graphs to enumerate");
}

SearchOptions search_options(const Config& c) { return {c.dedup, c.jobs, c.budget}; }

Edge parse_edge(const std::string& text) {
  int u = 0, v = 0;
  char dash = 0;
  std::istringstream in(text);
  if (!(in >> u >> dash >> v) || (dash != '-' && dash != ',') || !(in >> std::ws).eof()) {
    throw UsageError("bad edge \"" + text + "\", expected u-v");
  }
  return {u, v};
}

std::vector<Edge> parse_edges(const std::string& text) {
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) edges.push_back(parse_edge(item));
  return edges;
}

void need(const Config& c, std::initializer_list<const char*> names, const std::string& what) {
  for (const char* name : names) {
    if (!c.given(name)) throw UsageError(what + " needs --" + name);
  }
}

std::vector<Graph> construct(const Config& c) {
  const auto family = parse_family(c.construction);
  if (!family) throw UsageError("unknown construction \"" + c.construction + "\"");
  ConstructionSpec s;
  s.family = *family;
  s.n = c.n, s.m = c.m, s.k = c.k, s.l = c.l, s.a = c.a, s.b = c.b;
  switch (*family) {
    case Family::kLex:
    case Family::kTheorem4: need(c, {"n", "m"}, c.construction); break;
    case Family::kTuran: need(c, {"n", "k"}, c.construction); break;
    case Family::kTheorem2:
      need(c, {"n", "m"}, c.construction);
      if (c.given("seed")) return {theorem2_graph(c.n, c.m, EdgeChoice{c.seed})};
      break;
    case Family::kTheorem3Ls: {
      need(c, {"n", "deleted"}, c.construction);
      if (c.deleted.find('-') != std::string::npos) return {theorem3_ls_graph(c.n, parse_edges(c.deleted))};
      int count = 0;
      const char* end = c.deleted.data() + c.deleted.size();
      const auto [ptr, ec] = std::from_chars(c.deleted.data(), end, count);
      if (ec != std::errc() || ptr != end) throw UsageError("bad --deleted \"" + c.deleted + "\"");
      return {theorem3_ls_graph(c.n, count)};
    }
    case Family::kTheorem3Fs: need(c, {"a", "b"}, c.construction); break;
    case Family::kTheorem5Pair: need(c, {"k", "l", "n"}, c.construction); break;
    case Family::kTheorem6Pair: need(c, {"k", "n"}, c.construction); break;
    case Family::kEdgeMove:
      need(c, {"graph6", "edge", "y", "z"}, c.construction);
      if (c.graph6.size() != 1) throw UsageError("edge-move takes exactly one --graph6");
      s.base = graph6_decode(c.graph6.front());
      s.edge = parse_edge(c.edge);
      s.y = c.y, s.z = c.z;
      break;
  }
  return build(s);
}

std::vector<Graph> load_graphs(const Config& c) {
  const bool edge_move = c.construction == "edge-move";
  int sources = 0;
  for (const char* name : {"construction", "graph6-file", "edgelist-file"}) sources += c.given(name);
  if (c.given("graph6") && !edge_move) ++sources;
  if (sources != 1) {
    throw UsageError(
        "give exactly one input: --construction, --graph6, --graph6-file or --edgelist-file");
  }
  if (c.given("construction")) return construct(c);
  if (c.given("graph6")) {
    std::vector<Graph> graphs;
    for (const auto& s : c.graph6) graphs.push_back(graph6_decode(s));
    return graphs;
  }
  const std::string& path = c.given("graph6-file") ? c.graph6_file : c.edgelist_file;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    if (c.given("graph6-file")) return read_graph6_stream(in);
    return {parse_edge_list(in)};
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string coefficient_list(const IntPolynomial& f) {
  std::string s = "[";
  const auto digits = to_decimal_strings(f);
  for (std::size_t i = 0; i < digits.size(); ++i) s += (i ? ", " : "") + digits[i];
  return s + "]";
}

void write_output(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out);
  if (!file || !(file << text)) throw std::runtime_error("cannot write " + c.out);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void check_k(const Config& c) {
  if (c.k < 2) throw UsageError("--k must be at least 2");
}

int cmd_poly(const Config& c, std::ostream& out) {
  check_k(c);
  const auto graphs = load_graphs(c);
  std::ostringstream text;
  Json list = Json::array();
  if (c.format == "csv") text << "graph6,n,m,k,degree,coefficients\n";
  for (const Graph& g : graphs) {
    const IntPolynomial f = class_polynomial(g, c.k);
    const std::string g6 = graph6_encode(g);
    if (c.format == "text") {
      text << "graph6: " << g6 << "\n"
           << "I_" << c.k << " = " << to_string(f) << "\n"
           << "coefficients: " << coefficient_list(f) << "\n"
           << "degree: " << f.degree() << "\n";
    } else if (c.format == "csv") {
      text << g6 << ',' << g.order() << ',' << g.size() << ',' << c.k << ',' << f.degree() << ',';
      const auto digits = to_decimal_strings(f);
      for (std::size_t i = 0; i < digits.size(); ++i) text << (i ? ";" : "") << digits[i];
      text << "\n";
    } else {
      list.push_back({{"graph6", g6}, {"n", g.order()}, {"m", g.size()}, {"k", c.k},
                      {"degree", f.degree()}, {"polynomial", to_json(f)}});
    }
  }
  if (c.format == "json") text << dump(list);
  write_output(c, text.str(), out);
  return kExitOk;
}

int cmd_compare(const Config& c, std::ostream& out, std::ostream& err) {
  check_k(c);
  const auto graphs = load_graphs(c);
  if (graphs.size() != 2) {
    throw UsageError("compare needs exactly two graphs, got " + std::to_string(graphs.size()));
  }
  const Graph& g = graphs[0];
  const Graph& h = graphs[1];
  if (g.order() != h.order() || g.size() != h.size()) {
    err << "warning: the graphs are in different classes (" << g.order() << "," << g.size()
        << ") and (" << h.order() << "," << h.size() << ")\n";
  }
  const IntPolynomial f = class_polynomial(g, c.k);
  const IntPolynomial q = class_polynomial(h, c.k);
  const DominanceVerdict v = dominance(f, q);
  const auto sign = [](std::strong_ordering o) {
    return o > 0 ? "first" : o < 0 ? "second" : "tie";
  };
  std::ostringstream text;
  if (c.format == "json") {
    Json j;
    j["k"] = c.k;
    j["graphs"] = {to_json(PolyGraph{g, f}), to_json(PolyGraph{h, q})};
    j["dominance"] = to_json(v);
    j["greater_near_zero"] = sign(compare_near_zero(f, q));
    j["greater_near_infinity"] = sign(compare_near_infinity(f, q));
    text << dump(j);
  } else if (c.format == "csv") {
    text << "first,second,k,verdict,x_lo,x_hi\n"
         << graph6_encode(g) << ',' << graph6_encode(h) << ',' << c.k << ',' << to_string(v.tag) << ','
         << (v.x_lo ? to_string(*v.x_lo) : "") << ',' << (v.x_hi ? to_string(*v.x_hi) : "") << "\n";
  } else {
    text << "first:  " << graph6_encode(g) << "  I_" << c.k << " = " << to_string(f) << "\n"
         << "second: " << graph6_encode(h) << "  I_" << c.k << " = " << to_string(q) << "\n"
         << "verdict: " << to_string(v.tag) << "\n";
    if (v.x_lo) {
      text << "first - second changes sign:\n";
      text << "  value at " << to_string(*v.x_lo) << ": " << to_string(eval(f - q, *v.x_lo)) << "\n"
           << "  value at " << to_string(*v.x_hi) << ": " << to_string(eval(f - q, *v.x_hi)) << "\n";
    }
    text << "greater near 0: " << sign(compare_near_zero(f, q)) << "\n"
         << "greater near infinity: " << sign(compare_near_infinity(f, q)) << "\n";
  }
  write_output(c, text.str(), out);
  return kExitOk;
}

std::string render_report(const OptimalityReport& r, bool timing) {
  std::ostringstream text;
  const SearchStatistics& s = r.stats;
  text << "class: S(" << r.spec.n << "," << r.spec.m << "), k = " << r.spec.k << ", objective "
       << to_string(r.spec.objective) << "\n"
       << "verdict: " << to_string(r.verdict) << "\n";
  for (const auto& w : r.witnesses) {
    text << "witness: " << graph6_encode(w.graph) << "  " << to_string(w.polynomial) << "\n";
  }
  if (r.refutation) {
    const Refutation& ref = *r.refutation;
    text << "refutation:\n"
         << "  " << graph6_encode(ref.first.graph) << "  " << to_string(ref.first.polynomial) << "\n"
         << "  " << graph6_encode(ref.second.graph) << "  " << to_string(ref.second.polynomial) << "\n"
         << "  dominance: " << to_string(ref.verdict.tag);
    if (ref.verdict.x_lo) {
      text << " (sign change between " << to_string(*ref.verdict.x_lo) << " and "
           << to_string(*ref.verdict.x_hi) << ")";
    }
    text << "\n";
  }
  text << "source: " << s.source << "\n"
       << "class size: " << s.class_size << "\n"
       << "graphs examined: " << s.graphs_examined << "\n";
  if (s.isomorphism_classes) text << "isomorphism classes: " << *s.isomorphism_classes << "\n";
  text << "distinct polynomials: " << s.distinct_polynomials << "\n"
       << "dominance checks: " << s.dominance_checks << "\n";
  if (timing) text << "wall seconds: " << s.wall_seconds << "\n";
  return text.str();
}

int cmd_search(const Config& c, std::ostream& out, std::ostream& err) {
  check_k(c);
  const auto objective = parse_objective(c.objective);
  OptimalityReport report;
  if (c.given("graph6-file") || c.given("graph6") || c.given("edgelist-file") ||
      c.given("construction")) {
    const auto graphs = load_graphs(c);
    if (graphs.empty()) throw std::runtime_error("no graphs to search");
    ClassSpec spec{c.given("n") ? c.n : graphs.front().order(),
                   c.given("m") ? c.m : graphs.front().size(), c.k, *objective};
    report = find_optimum_over(spec, graphs, search_options(c));
  } else {
    need(c, {"n", "m"}, "search");
    report = find_optimum({c.n, c.m, c.k, *objective}, search_options(c));
  }
  const auto problems = validate_report(report);
  for (const auto& p : problems) err << "report check failed: " << p << "\n";
  if (!problems.empty()) return kExitError;

  const Json j = to_json(report, c.timing);
  const std::string csv = csv_header() + "\n" + csv_row(report, c.timing) + "\n";
  if (!c.out.empty()) {
    std::filesystem::create_directories(c.out);
    const auto dir = std::filesystem::path(c.out);
    std::ofstream json_file(dir / "report.json");
    std::ofstream csv_file(dir / "summary.csv");
    if (!(json_file << dump(j)) || !(csv_file << csv)) {
      throw std::runtime_error("cannot write reports to " + c.out);
    }
  }
  if (c.format == "json") {
    out << dump(j);
  } else if (c.format == "csv") {
    out << csv;
  } else {
    out << render_report(report, c.timing);
  }
  return report.verdict == Verdict::kBudgetExceeded ? kExitBudget : kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const auto tag = parse_theorem(c.theorem);
  if (!tag) throw UsageError("unknown theorem tag \"" + c.theorem + "\"");
  VerifyParams p;
  if (c.given("n")) p.n = c.n;
  if (c.given("m")) p.m = c.m;
  if (c.given("k")) p.k = c.k;
  if (c.given("l")) p.l = c.l;
  if (c.given("a")) p.a = c.a;
  if (c.given("b")) p.b = c.b;
  p.trials = c.trials;
  p.max_n = c.max_n;
  p.seed = c.seed;
  p.search = search_options(c);
  const VerificationReport r = verify_theorem(*tag, p);
  std::ostringstream text;
  if (c.format == "json") {
    Json j;
    j["theorem"] = std::string(to_string(r.tag));
    j["passed"] = r.passed;
    j["evidence"] = r.evidence;
    j["failures"] = r.failures;
    text << dump(j);
  } else if (c.format == "csv") {
    text << "theorem,result,failures\n"
         << to_string(r.tag) << ',' << (r.passed ? "PASS" : "FAIL") << ',' << r.failures.size() << "\n";
  } else {
    text << to_string(r.tag) << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
    for (const auto& e : r.evidence) text << "  " << e << "\n";
    for (const auto& f : r.failures) text << "  FAILED: " << f << "\n";
  }
  write_output(c, text.str(), out);
  return r.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_construct(const Config& c, std::ostream& out) {
  if (!c.given("construction")) throw UsageError("construct needs --construction");
  const auto graphs = construct(c);
  std::ostringstream text;
  if (c.format == "json") {
    Json list = Json::array();
    for (const Graph& g : graphs) {
      list.push_back({{"graph6", graph6_encode(g)}, {"n", g.order()}, {"m", g.size()}});
    }
    text << dump(list);
  } else if (c.format == "csv") {
    text << "graph6,n,m\n";
    for (const Graph& g : graphs) text << graph6_encode(g) << ',' << g.order() << ',' << g.size() << "\n";
  } else {
    for (const Graph& g : graphs) text << graph6_encode(g) << "\n";
  }
  write_output(c, text.str(), out);
  return kExitOk;
}

int cmd_edge_move(Config c, std::ostream& out) {
  c.construction = "edge-move";
  need(c, {"graph6", "edge", "y", "z"}, "edge-move");
  const Graph h1 = graph6_decode(c.graph6.front());
  const Graph h2 = construct(c).front();
  const IntPolynomial f1 = independence_polynomial(h1);
  const IntPolynomial f2 = independence_polynomial(h2);
  const DominanceVerdict v = dominance(f1, f2);
  std::ostringstream text;
  if (c.format == "json") {
    Json j;
    j["h1"] = to_json(PolyGraph{h1, f1});
    j["h2"] = to_json(PolyGraph{h2, f2});
    j["dominance"] = to_json(v);
    text << dump(j);
  } else {
    text << "H1: " << graph6_encode(h1) << "  " << to_string(f1) << "\n"
         << "H2: " << graph6_encode(h2) << "  " << to_string(f2) << "\n"
         << "dominance(H1, H2): " << to_string(v.tag) << "\n";
  }
  write_output(c, text.str(), out);
  return kExitOk;
}

int cmd_explore(const Config& c, std::ostream& out) {
  const ExplorationReport r = explore_least(c.max_n, search_options(c));
  std::ostringstream text;
  if (c.format == "json") {
    Json j;
    j["max_n"] = r.max_n;
    j["classes_checked"] = r.classes_checked;
    j["classes_skipped"] = r.classes_skipped;
    j["counterexamples"] = Json::array();
    for (const auto& ce : r.counterexamples) j["counterexamples"].push_back(to_json(ce, c.timing));
    j["status"] = r.counterexamples.empty() ? "evidence, not proof" : "counterexample found";
    text << dump(j);
  } else {
    text << "optimally-least graphs for I, all classes with n <= " << r.max_n << "\n"
         << "classes checked: " << r.classes_checked << ", skipped over budget: "
         << r.classes_skipped << "\n";
    if (r.counterexamples.empty()) {
      text << "no counterexample found; this is evidence, not proof\n";
    }
    for (const auto& ce : r.counterexamples) text << "counterexample:\n" << render_report(ce, c.timing);
  }
  write_output(c, text.str(), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal graphs for independence polynomials", "indopt"};
  app.require_subcommand(1);
  Config c;

  auto* poly = app.add_subcommand("poly", "Print I_k of the input graph(s)");
  auto* compare = app.add_subcommand("compare", "Compare I_k of two graphs on [0, inf)");
  auto* search = app.add_subcommand("search", "Decide whether S(n,m) has an optimal graph");
  auto* verify = app.add_subcommand("verify", "Check a result at small parameters");
  auto* construct_cmd = app.add_subcommand("construct", "Print a construction as graph6");
  auto* edge_move = app.add_subcommand("edge-move", "Apply the edge move and compare I");
  auto* explore = app.add_subcommand("explore", "Look for classes with no optimally-least graph");
  for (auto* sub : {poly, compare, search, verify, construct_cmd, edge_move, explore}) {
    add_common(sub, c);
  }
  for (auto* sub : {search, verify, explore}) add_search_options(sub, c);
  verify->add_option("theorem", c.theorem, "thm1 .. thm6 or lemma4")->required();
  verify->add_option("--trials", c.trials, "lemma4 trials (default 200)");
  verify->add_option("--max-n", c.max_n, "lemma4 largest order (default 10)");
  explore->add_option("--max-n", c.max_n, "Largest order to explore (default 10)");

  std::vector<std::string> argv_store{"indopt"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [sub, options] : c.per_command) {
    if (sub->parsed()) c.opts = options;
  }
  try {
    if (*poly) return cmd_poly(c, out);
    if (*compare) return cmd_compare(c, out, err);
    if (*search) return cmd_search(c, out, err);
    if (*verify) return cmd_verify(c, out);
    if (*construct_cmd) return cmd_construct(c, out);
    if (*edge_move) return cmd_edge_move(c, out);
    if (*explore) return cmd_explore(c, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace indopt::cli
