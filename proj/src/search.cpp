#include "indopt/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

#include "indopt/canonical.hpp"
#include "indopt/indpoly.hpp"
#include "indopt/kindpoly.hpp"

namespace indopt {

std::string_view to_string(Objective o) {
  return o == Objective::kGreatest ? "GREATEST" : "LEAST";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kExists: return "EXISTS";
    case Verdict::kNotExists: return "NOT_EXISTS";
    case Verdict::kBudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

std::optional<Objective> parse_objective(std::string_view text) {
  if (text == "GREATEST" || text == "greatest") return Objective::kGreatest;
  if (text == "LEAST" || text == "least") return Objective::kLeast;
  return std::nullopt;
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::kExists, Verdict::kNotExists, Verdict::kBudgetExceeded}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

namespace {

using Ref = std::uint64_t;
using Buckets = std::map<IntPolynomial, std::vector<Ref>, PolynomialLess>;

std::vector<Edge> edge_slots(int n) {
  std::vector<Edge> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  return slots;
}

void check_class(int n, int m) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("class order must be in [1, 62]");
  if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("class size must be in [0, C(n,2)]");
}

std::vector<int> unrank(Ref rank, int slots, int m) {
  std::vector<int> comb;
  comb.reserve(m);
  BigInt r = rank;
  int next = 0;
  for (int i = 0; i < m; ++i) {
    for (int c = next;; ++c) {
      const BigInt count = binomial(slots - c - 1, m - i - 1);
      if (r < count) {
        comb.push_back(c);
        next = c + 1;
        break;
      }
      r -= count;
    }
  }
  return comb;
}

bool next_combination(std::vector<int>& comb, int slots) {
  const int m = static_cast<int>(comb.size());
  int i = m - 1;
  while (i >= 0 && comb[i] == slots - m + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

Graph from_combination(int n, const std::vector<Edge>& slots, const std::vector<int>& comb) {
  std::array<std::uint64_t, kMaxOrder> rows{};
  for (int c : comb) {
    const auto [u, v] = slots[c];
    rows[u] |= 1ULL << v;
    rows[v] |= 1ULL << u;
  }
  return make_graph_unchecked(n, rows.data());
}

/// Walks labelled graphs with ranks in [begin, end).
void walk_ranks(int n, int m, Ref begin, Ref end,
                const std::function<void(const Graph&, Ref)>& visit) {
  if (begin >= end) return;
  const auto slots = edge_slots(n);
  std::vector<int> comb = unrank(begin, static_cast<int>(slots.size()), m);
  for (Ref r = begin; r < end; ++r) {
    visit(from_combination(n, slots, comb), r);
    if (!next_combination(comb, static_cast<int>(slots.size()))) break;
  }
}

struct PartialSweep {
  Buckets buckets;
  // canonical form -> (lowest ref, polynomial); only with dedup.
  std::unordered_map<std::string, std::pair<Ref, IntPolynomial>> classes;
  std::uint64_t examined = 0;
};

using RangeWalker = std::function<void(Ref, Ref, const std::function<void(const Graph&, Ref)>&)>;

struct SweepResult {
  Buckets buckets;
  std::uint64_t examined = 0;
  std::optional<std::uint64_t> classes;
};

SweepResult sweep(Ref total, int k, bool dedup, int jobs, const RangeWalker& walk) {
  jobs = std::max(1, jobs);
  if (total < static_cast<Ref>(jobs) * 64) jobs = 1;
  std::vector<PartialSweep> parts(jobs);
  auto work = [&](int w) {
    const Ref chunk = (total + jobs - 1) / jobs;
    const Ref begin = std::min(total, chunk * w);
    const Ref end = std::min(total, begin + chunk);
    PartialSweep& part = parts[w];
    walk(begin, end, [&](const Graph& g, Ref ref) {
      ++part.examined;
      if (dedup) {
        std::string key = canonical_form(g);
        if (part.classes.find(key) == part.classes.end()) {
          part.classes.emplace(std::move(key), std::make_pair(ref, class_polynomial(g, k)));
        }
        return;
      }
      part.buckets[class_polynomial(g, k)].push_back(ref);
    });
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  SweepResult result;
  if (dedup) {
    std::unordered_map<std::string, std::pair<Ref, IntPolynomial>> merged;
    for (auto& part : parts) {
      result.examined += part.examined;
      for (auto& [key, entry] : part.classes) {
        auto [it, inserted] = merged.emplace(key, entry);
        if (!inserted && entry.first < it->second.first) it->second = entry;
      }
    }
    result.classes = merged.size();
    for (auto& [key, entry] : merged) result.buckets[entry.second].push_back(entry.first);
  } else {
    for (auto& part : parts) {
      result.examined += part.examined;
      for (auto& [poly, refs] : part.buckets) {
        auto& dest = result.buckets[poly];
        dest.insert(dest.end(), refs.begin(), refs.end());
      }
    }
  }
  for (auto& [poly, refs] : result.buckets) std::sort(refs.begin(), refs.end());
  return result;
}

bool better_near_zero(Objective o, const IntPolynomial& a, const IntPolynomial& b) {
  const auto c = compare_near_zero(a, b);
  return o == Objective::kGreatest ? c > 0 : c < 0;
}

bool better_near_infinity(Objective o, const IntPolynomial& a, const IntPolynomial& b) {
  const auto c = compare_near_infinity(a, b);
  return o == Objective::kGreatest ? c > 0 : c < 0;
}

/// Whether `candidate` is at least as good as `other` on all of [0, inf).
bool beats(Objective o, const IntPolynomial& candidate, const IntPolynomial& other,
           DominanceVerdict& verdict) {
  verdict = dominance(candidate, other);
  if (o == Objective::kGreatest) return verdict.first_dominates();
  return verdict.tag == Dominance::kEqual || verdict.tag == Dominance::kEverywhereLe;
}

OptimalityReport decide(const ClassSpec& spec, SweepResult sweep_result,
                        const std::function<Graph(Ref)>& materialize, SearchStatistics stats) {
  OptimalityReport report;
  report.spec = spec;
  stats.graphs_examined = sweep_result.examined;
  stats.isomorphism_classes = sweep_result.classes;
  stats.distinct_polynomials = sweep_result.buckets.size();
  const Buckets& buckets = sweep_result.buckets;
  if (buckets.empty()) {
    report.verdict = Verdict::kNotExists;
    report.stats = stats;
    return report;
  }

  auto near_zero = buckets.begin();
  auto near_infinity = buckets.begin();
  for (auto it = buckets.begin(); it != buckets.end(); ++it) {
    if (better_near_zero(spec.objective, it->first, near_zero->first)) near_zero = it;
    if (better_near_infinity(spec.objective, it->first, near_infinity->first)) near_infinity = it;
  }

  auto representative = [&](Buckets::const_iterator it) {
    return PolyGraph{materialize(it->second.front()), it->first};
  };

  if (near_zero != near_infinity) {
    ++stats.dominance_checks;
    report.verdict = Verdict::kNotExists;
    report.refutation = Refutation{representative(near_zero), representative(near_infinity),
                                   dominance(near_zero->first, near_infinity->first)};
    report.stats = stats;
    return report;
  }

  const IntPolynomial& candidate = near_zero->first;
  for (auto it = buckets.begin(); it != buckets.end(); ++it) {
    if (it == near_zero) continue;
    DominanceVerdict verdict;
    ++stats.dominance_checks;
    if (!beats(spec.objective, candidate, it->first, verdict)) {
      report.verdict = Verdict::kNotExists;
      report.refutation = Refutation{representative(near_zero), representative(it), verdict};
      report.stats = stats;
      return report;
    }
  }

  report.verdict = Verdict::kExists;
  std::set<std::string> seen;
  for (Ref ref : near_zero->second) {
    Graph g = materialize(ref);
    if (seen.insert(canonical_form(g)).second) report.witnesses.push_back({g, candidate});
  }
  report.stats = stats;
  return report;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::uint64_t class_size(int n, int m) {
  check_class(n, m);
  const BigInt count = binomial(n * (n - 1) / 2, m);
  if (count > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(count);
}

Graph graph_at_rank(int n, int m, std::uint64_t rank) {
  if (rank >= class_size(n, m)) throw std::out_of_range("rank beyond class size");
  const auto slots = edge_slots(n);
  return from_combination(n, slots, unrank(rank, static_cast<int>(slots.size()), m));
}

void for_each_in_class(int n, int m, bool dedup, std::uint64_t budget,
                       const std::function<void(const Graph&, std::uint64_t)>& visit) {
  const std::uint64_t total = class_size(n, m);
  if (total > budget) {
    throw BudgetExceeded("S_{" + std::to_string(n) + "," + std::to_string(m) + "} has " +
                         (total == std::numeric_limits<std::uint64_t>::max()
                              ? std::string("more than 2^64")
                              : std::to_string(total)) +
                         " labelled graphs, budget is " + std::to_string(budget));
  }
  std::set<std::string> seen;
  walk_ranks(n, m, 0, total, [&](const Graph& g, Ref r) {
    if (dedup && !seen.insert(canonical_form(g)).second) return;
    visit(g, r);
  });
}

std::vector<Graph> enumerate_class(int n, int m, bool dedup, std::uint64_t budget) {
  std::vector<Graph> out;
  for_each_in_class(n, m, dedup, budget, [&](const Graph& g, std::uint64_t) { out.push_back(g); });
  return out;
}

IntPolynomial class_polynomial(const Graph& g, int k) {
  if (k == 2) return independence_polynomial(g);
  return k_independence_polynomial(g, k);
}

OptimalityReport find_optimum(const ClassSpec& spec, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  check_class(spec.n, spec.m);
  if (spec.k < 2) throw std::invalid_argument("k must be at least 2");
  SearchStatistics stats;
  stats.class_size = class_size(spec.n, spec.m);
  if (stats.class_size > options.budget) {
    OptimalityReport report;
    report.spec = spec;
    report.verdict = Verdict::kBudgetExceeded;
    stats.wall_seconds = seconds_since(start);
    report.stats = stats;
    return report;
  }
  const int n = spec.n;
  const int m = spec.m;
  SweepResult result = sweep(stats.class_size, spec.k, options.dedup, options.jobs,
                             [n, m](Ref b, Ref e, const auto& visit) { walk_ranks(n, m, b, e, visit); });
  OptimalityReport report =
      decide(spec, std::move(result), [n, m](Ref r) { return graph_at_rank(n, m, r); }, stats);
  report.stats.wall_seconds = seconds_since(start);
  return report;
}

OptimalityReport find_optimum_over(const ClassSpec& spec, const std::vector<Graph>& graphs,
                                   const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (spec.k < 2) throw std::invalid_argument("k must be at least 2");
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i].order() != spec.n || graphs[i].size() != spec.m) {
      throw std::invalid_argument("graph " + std::to_string(i + 1) + " is not in S_{" +
                                  std::to_string(spec.n) + "," + std::to_string(spec.m) + "}");
    }
  }
  SearchStatistics stats;
  stats.source = "graph-list";
  stats.class_size = graphs.size();
  if (stats.class_size > options.budget) {
    OptimalityReport report;
    report.spec = spec;
    report.verdict = Verdict::kBudgetExceeded;
    stats.wall_seconds = seconds_since(start);
    report.stats = stats;
    return report;
  }
  SweepResult result = sweep(graphs.size(), spec.k, options.dedup, options.jobs,
                             [&graphs](Ref b, Ref e, const auto& visit) {
                               for (Ref r = b; r < e; ++r) visit(graphs[r], r);
                             });
  OptimalityReport report =
      decide(spec, std::move(result), [&graphs](Ref r) { return graphs[r]; }, stats);
  report.stats.wall_seconds = seconds_since(start);
  return report;
}

std::vector<std::string> validate_report(const OptimalityReport& report) {
  std::vector<std::string> problems;
  const ClassSpec& spec = report.spec;
  auto check_member = [&](const PolyGraph& pg, const std::string& what) {
    if (pg.graph.order() != spec.n || pg.graph.size() != spec.m) {
      problems.push_back(what + " is not in S_{n,m}");
    }
    if (class_polynomial(pg.graph, spec.k) != pg.polynomial) {
      problems.push_back(what + " polynomial does not match its graph");
    }
  };
  switch (report.verdict) {
    case Verdict::kExists: {
      if (report.witnesses.empty()) problems.push_back("EXISTS without a witness");
      for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
        check_member(report.witnesses[i], "witness " + std::to_string(i + 1));
        if (report.witnesses[i].polynomial != report.witnesses.front().polynomial) {
          problems.push_back("co-witnesses disagree on the polynomial");
        }
      }
      std::set<std::string> forms;
      for (const auto& w : report.witnesses) {
        if (!forms.insert(canonical_form(w.graph)).second) {
          problems.push_back("two witnesses are isomorphic");
        }
      }
      break;
    }
    case Verdict::kNotExists: {
      if (!report.refutation) {
        if (report.stats.graphs_examined != 0) problems.push_back("NOT_EXISTS without a refutation");
        break;
      }
      const Refutation& r = *report.refutation;
      check_member(r.first, "refutation graph 1");
      check_member(r.second, "refutation graph 2");
      const DominanceVerdict fresh = dominance(r.first.polynomial, r.second.polynomial);
      if (fresh.tag != r.verdict.tag) problems.push_back("refutation verdict does not re-derive");
      const bool first_ok = spec.objective == Objective::kGreatest
                                ? r.verdict.first_dominates()
                                : (r.verdict.tag == Dominance::kEqual ||
                                   r.verdict.tag == Dominance::kEverywhereLe);
      if (first_ok) problems.push_back("refutation pair does not refute the candidate");
      if (r.verdict.tag == Dominance::kCrosses) {
        if (!r.verdict.x_lo || !r.verdict.x_hi) {
          problems.push_back("crossing verdict lacks witnesses");
        } else {
          const IntPolynomial d = r.first.polynomial - r.second.polynomial;
          const Rational lo = eval(d, *r.verdict.x_lo);
          const Rational hi = eval(d, *r.verdict.x_hi);
          if (*r.verdict.x_lo < 0 || *r.verdict.x_hi < 0) problems.push_back("negative witness");
          if (lo == 0 || hi == 0 || (lo > 0) == (hi > 0)) {
            problems.push_back("crossing witnesses do not show opposite strict signs");
          }
        }
      }
      break;
    }
    case Verdict::kBudgetExceeded:
      if (!report.witnesses.empty() || report.refutation) {
        problems.push_back("BUDGET_EXCEEDED report carries a verdict payload");
      }
      break;
  }
  return problems;
}

}  // namespace indopt
