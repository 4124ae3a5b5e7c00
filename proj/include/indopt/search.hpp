#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "indopt/dominance.hpp"
#include "indopt/graph.hpp"
#include "indopt/polynomial.hpp"

namespace indopt {

enum class Objective { kGreatest, kLeast };
enum class Verdict { kExists, kNotExists, kBudgetExceeded };

std::string_view to_string(Objective o);
std::string_view to_string(Verdict v);
std::optional<Objective> parse_objective(std::string_view text);
std::optional<Verdict> parse_verdict(std::string_view text);

/// One optimality question: is there a graph in S_{n,m} whose I_k is
/// greatest (least) on all of [0, inf)?
struct ClassSpec {
  int n = 1;
  int m = 0;
  int k = 2;
  Objective objective = Objective::kGreatest;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchOptions {
  bool dedup = false;
  int jobs = 1;
  std::uint64_t budget = kDefaultBudget;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Number of labelled graphs in S_{n,m}, saturated at UINT64_MAX.
std::uint64_t class_size(int n, int m);

/// The labelled graph with the given lexicographic rank among the
/// m-subsets of the edges of K_n (edges ordered (0,1), (0,2), ..., (1,2), ...).
Graph graph_at_rank(int n, int m, std::uint64_t rank);

/// Calls `visit(graph, rank)` for every labelled graph in S_{n,m} in rank
/// order; with `dedup`, only the lowest-ranked member of each isomorphism
/// class. Throws BudgetExceeded when C(C(n,2), m) > budget.
void for_each_in_class(int n, int m, bool dedup, std::uint64_t budget,
                       const std::function<void(const Graph&, std::uint64_t)>& visit);
std::vector<Graph> enumerate_class(int n, int m, bool dedup,
                                   std::uint64_t budget = kDefaultBudget);

/// I_k with the engine suited to k: the recursion for k = 2, the clique
/// containment sweep otherwise.
IntPolynomial class_polynomial(const Graph& g, int k);

struct PolyGraph {
  Graph graph;
  IntPolynomial polynomial;
};

struct Refutation {
  PolyGraph first;
  PolyGraph second;
  /// dominance(first.polynomial, second.polynomial).
  DominanceVerdict verdict;
};

struct SearchStatistics {
  std::string source = "enumeration";
  std::uint64_t class_size = 0;
  std::uint64_t graphs_examined = 0;
  std::optional<std::uint64_t> isomorphism_classes;
  std::uint64_t distinct_polynomials = 0;
  std::uint64_t dominance_checks = 0;
  double wall_seconds = 0.0;
};

struct OptimalityReport {
  ClassSpec spec;
  Verdict verdict = Verdict::kBudgetExceeded;
  /// When kExists: one graph per isomorphism class attaining the optimum.
  std::vector<PolyGraph> witnesses;
  /// When kNotExists: a pair that no single graph can beat on both ends.
  std::optional<Refutation> refutation;
  SearchStatistics stats;
};

/// Decides existence over S_{n,m}.
///
/// Every member's I_k is computed; the candidate optimal for x near 0
/// (first differing coefficient) and for x near infinity (last differing
/// coefficient) are compared. Different polynomials refute existence at
/// once. Otherwise the common candidate is checked against every other
/// distinct polynomial by exact dominance.
OptimalityReport find_optimum(const ClassSpec& spec, const SearchOptions& options = {});

/// Same decision over an explicit graph list (e.g. external generator
/// output). Every graph must have order spec.n and size spec.m.
OptimalityReport find_optimum_over(const ClassSpec& spec, const std::vector<Graph>& graphs,
                                   const SearchOptions& options = {});

/// Re-derives the report's claims from its graphs: polynomials, witness
/// agreement, and crossing evidence. Returns human-readable problems;
/// empty means consistent.
std::vector<std::string> validate_report(const OptimalityReport& report);

}  // namespace indopt
