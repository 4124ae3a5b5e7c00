#include <doctest.h>

#include <limits>
#include <random>
#include <set>

#include "indopt/canonical.hpp"
#include "indopt/constructions.hpp"
#include "indopt/indpoly.hpp"
#include "indopt/search.hpp"

using namespace indopt;

namespace {

bool witnessed(const OptimalityReport& r, const Graph& g) {
  for (const auto& w : r.witnesses) {
    if (canonical_form(w.graph) == canonical_form(g)) return true;
  }
  return false;
}

std::set<std::string> witness_forms(const OptimalityReport& r) {
  std::set<std::string> out;
  for (const auto& w : r.witnesses) out.insert(canonical_form(w.graph));
  return out;
}

}  // namespace

TEST_CASE("enumeration") {
  CHECK(enumerate_class(4, 2, false).size() == 15);
  const auto reps = enumerate_class(4, 2, true);
  REQUIRE(reps.size() == 2);
  std::set<std::string> forms;
  for (const auto& g : reps) forms.insert(canonical_form(g));
  CHECK(forms.count(canonical_form(lex_graph(4, 2))) == 1);
  CHECK(forms.count(canonical_form(theorem4_graph(4, 2))) == 1);
  CHECK(enumerate_class(3, 3, false) == std::vector<Graph>{complete_graph(3)});
  CHECK(enumerate_class(4, 0, true) == std::vector<Graph>{empty_graph(4)});
  CHECK_THROWS_AS(enumerate_class(10, 20, false, 1000), BudgetExceeded);
  CHECK(class_size(62, 900) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("ranks follow lexicographic edge order") {
  CHECK(graph_at_rank(4, 2, 0) == Graph::from_edges(4, {{0, 1}, {0, 2}}));
  CHECK(graph_at_rank(4, 2, 14) == Graph::from_edges(4, {{1, 3}, {2, 3}}));
  std::uint64_t expect = 0;
  for_each_in_class(5, 3, false, kDefaultBudget, [&](const Graph& g, std::uint64_t rank) {
    CHECK(rank == expect++);
    CHECK(graph_at_rank(5, 3, rank) == g);
  });
  CHECK(expect == 120);
  CHECK_THROWS(graph_at_rank(4, 2, 15));
}

TEST_CASE("small decisions") {
  const auto greatest = find_optimum({4, 2, 2, Objective::kGreatest});
  CHECK(greatest.verdict == Verdict::kExists);
  CHECK(witnessed(greatest, lex_graph(4, 2)));
  CHECK(validate_report(greatest).empty());

  const auto least = find_optimum({4, 2, 2, Objective::kLeast});
  CHECK(least.verdict == Verdict::kExists);
  REQUIRE(least.witnesses.size() == 1);
  CHECK(canonical_form(least.witnesses[0].graph) == canonical_form(theorem4_graph(4, 2)));

  const auto over = find_optimum({8, 14, 2, Objective::kLeast}, {false, 1, 1000});
  CHECK(over.verdict == Verdict::kBudgetExceeded);
  CHECK(over.witnesses.empty());
  CHECK(validate_report(over).empty());
  CHECK_THROWS(find_optimum({4, 7, 2, Objective::kLeast}));
}

TEST_CASE("dedup, workers and explicit lists give the same verdicts") {
  for (auto objective : {Objective::kGreatest, Objective::kLeast}) {
    const ClassSpec spec{5, 4, 2, objective};
    const auto plain = find_optimum(spec);
    const auto dedup = find_optimum(spec, {true, 1, kDefaultBudget});
    const auto parallel = find_optimum(spec, {false, 4, kDefaultBudget});
    CHECK(plain.verdict == dedup.verdict);
    CHECK(plain.verdict == parallel.verdict);
    CHECK(dedup.stats.isomorphism_classes.value() == 6);
    CHECK(plain.witnesses.size() == dedup.witnesses.size());
    CHECK(witness_forms(plain) == witness_forms(parallel));
    const auto listed = find_optimum_over(spec, enumerate_class(5, 4, false));
    CHECK(listed.verdict == plain.verdict);
    CHECK(listed.stats.source == "graph-list");
  }
  CHECK_THROWS(find_optimum_over({5, 4, 2, Objective::kLeast}, {complete_graph(5)}));
}

TEST_CASE("construction family sweeps") {
  for (int n = 2; n <= 7; ++n) {
    for (int m = 0; 2 * m <= n; ++m) {
      const auto r = find_optimum({n, m, 2, Objective::kLeast});
      CHECK(r.verdict == Verdict::kExists);
      CHECK(witnessed(r, theorem4_graph(n, m)));
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m <= n * (n - 1) / 2; ++m) {
      const auto r = find_optimum({n, m, 2, Objective::kGreatest});
      CHECK(r.verdict == Verdict::kExists);
      CHECK(witnessed(r, lex_graph(n, m)));
    }
  }
}

TEST_CASE("a witness beats random class members") {
  const auto r = find_optimum({6, 7, 2, Objective::kGreatest});
  REQUIRE(r.verdict == Verdict::kExists);
  std::mt19937_64 rng(31);
  const std::uint64_t size = class_size(6, 7);
  for (int t = 0; t < 100; ++t) {
    const Graph g = graph_at_rank(6, 7, rng() % size);
    CHECK(dominance(r.witnesses[0].polynomial, independence_polynomial(g)).first_dominates());
  }
}

TEST_CASE("k = 3 least fails at (7, 9)") {
  const auto r = find_optimum({7, 9, 3, Objective::kLeast}, {false, 4, kDefaultBudget});
  CHECK(r.verdict == Verdict::kNotExists);
  REQUIRE(r.refutation.has_value());
  const auto [g, h] = theorem6_pair(3, 7);
  CHECK(canonical_form(r.refutation->first.graph) == canonical_form(g));
  CHECK(canonical_form(r.refutation->second.graph) == canonical_form(h));
  CHECK(r.refutation->verdict.tag == Dominance::kCrosses);
  CHECK(r.stats.graphs_examined == 293930);
  CHECK(validate_report(r).empty());
}

TEST_CASE("validation catches tampered reports") {
  auto r = find_optimum({5, 3, 2, Objective::kLeast});
  REQUIRE(r.verdict == Verdict::kExists);
  auto bad = r;
  bad.witnesses[0].polynomial = IntPolynomial{1, 5};
  CHECK_FALSE(validate_report(bad).empty());
  bad = r;
  bad.witnesses[0].graph = complete_graph(5);
  CHECK_FALSE(validate_report(bad).empty());

  auto crossing = find_optimum({7, 9, 3, Objective::kLeast});
  REQUIRE(crossing.refutation.has_value());
  crossing.refutation->verdict.x_hi = crossing.refutation->verdict.x_lo;
  CHECK_FALSE(validate_report(crossing).empty());
}
