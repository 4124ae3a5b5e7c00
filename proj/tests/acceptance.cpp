// Acceptance suite: one PASS/FAIL line per criterion.
//
//   indopt_acceptance              run everything
//   indopt_acceptance --criterion N

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "indopt/canonical.hpp"
#include "indopt/constructions.hpp"
#include "indopt/dominance.hpp"
#include "indopt/indpoly.hpp"
#include "indopt/kindpoly.hpp"
#include "indopt/search.hpp"
#include "oracles.hpp"

using namespace indopt;

namespace {

// Collects failure messages and side notes for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string poly_text(const IntPolynomial& f) { return to_string(f); }

std::string tag(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

int choose2(int n) { return n * (n - 1) / 2; }

bool coeffwise_le(const IntPolynomial& f, const IntPolynomial& g) {
  const int d = std::max(f.degree(), g.degree());
  for (int j = 0; j <= d; ++j) {
    if (f[j] > g[j]) return false;
  }
  return true;
}

IntPolynomial from_counts(const std::vector<long long>& c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial from_counts(const CliqueCounts& c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPolynomial(std::move(v));
}

bool witness_has_class(const OptimalityReport& r, const Graph& g) {
  const std::string form = canonical_form(g);
  for (const auto& w : r.witnesses) {
    if (canonical_form(w.graph) == form) return true;
  }
  return false;
}

// 1. Lex closed form against the recursion and the subset oracle.
void closed_formula(Outcome& out) {
  int displayed_mismatches = 0;
  int pairs = 0;
  for (int n = 1; n <= 9; ++n) {
    for (int m = 0; m <= choose2(n); ++m) {
      ++pairs;
      const Graph g = lex_graph(n, m);
      const IntPolynomial closed = lex_polynomial_closed(n, m);
      const IntPolynomial rec = independence_polynomial(g);
      const IntPolynomial brute = from_counts(oracle::independence(g));
      out.expect(closed == rec && rec == brute,
                 tag(n, m) + ": closed " + poly_text(closed) + ", recursion " + poly_text(rec) +
                     ", oracle " + poly_text(brute));
      if (lex_polynomial_displayed(n, m) != brute) ++displayed_mismatches;
    }
  }
  out.notes.push_back(std::to_string(pairs) + " (n,m) pairs");
  out.notes.push_back("displayed product formula differs from the oracle on " +
                      std::to_string(displayed_mismatches) + " pairs");
}

// 2. Lex graph is coefficientwise greatest over every labelled graph, n <= 6.
void lex_greatest(Outcome& out) {
  std::uint64_t graphs = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= choose2(n); ++m) {
      const Graph lex = lex_graph(n, m);
      const IntPolynomial top = independence_polynomial(lex);
      for_each_in_class(n, m, false, kDefaultBudget, [&](const Graph& g, std::uint64_t rank) {
        ++graphs;
        const IntPolynomial p = independence_polynomial(g);
        if (!coeffwise_le(p, top)) {
          out.failures.push_back(tag(n, m) + " rank " + std::to_string(rank) + ": " +
                                 poly_text(p) + " exceeds lex " + poly_text(top));
        }
      });
      const auto r = find_optimum({n, m, 2, Objective::kGreatest});
      out.expect(r.verdict == Verdict::kExists && witness_has_class(r, lex),
                 tag(n, m) + ": find_optimum did not return the lex class");
    }
  }
  out.notes.push_back(std::to_string(graphs) + " labelled graphs");
}

// 3. Two-clique family: polynomial and least optimality.
void two_cliques(Outcome& out) {
  for (int n = 4; n <= 8; ++n) {
    const int lo = choose2(n) - n * n / 4;
    for (int m = lo; m <= choose2(n); ++m) {
      const IntPolynomial want{1, n, choose2(n) - m};
      for (std::uint64_t seed : {0ULL, 1ULL, 2ULL}) {
        const Graph g = theorem2_graph(n, m, seed == 0 ? EdgeChoice{} : EdgeChoice{seed});
        const IntPolynomial got = independence_polynomial(g);
        out.expect(got == want && from_counts(oracle::independence(g)) == want && g.size() == m,
                   tag(n, m) + " choice " + std::to_string(seed) + ": " + poly_text(got) +
                       " vs " + poly_text(want));
      }
    }
  }
  auto least = [&](int n, int m) {
    const auto r = find_optimum({n, m, 2, Objective::kLeast});
    const bool ok = r.verdict == Verdict::kExists && !r.witnesses.empty() &&
                    r.witnesses[0].polynomial == IntPolynomial{1, n, choose2(n) - m} &&
                    witness_has_class(r, theorem2_graph(n, m));
    out.expect(ok, tag(n, m) + ": search did not confirm optimally-least");
  };
  int searched = 0;
  for (int n = 4; n <= 6; ++n) {
    for (int m = choose2(n) - n * n / 4; m <= choose2(n); ++m, ++searched) least(n, m);
  }
  least(7, 9);
  least(7, 12);
  out.notes.push_back(std::to_string(searched + 2) + " classes searched, including (7,9) and (7,12)");
}

// 4. Deleted-edge family and the three-clique instances.
void three_cliques(Outcome& out) {
  for (int n = 5; n <= 8; ++n) {
    for (int k = 1; k <= n / 2; ++k) {
      const int m = choose2(n) - ((n + 1) / 2) * (n / 2) - k;
      const IntPolynomial want{1, n, choose2(n) - m, k * (n / 2)};
      try {
        const Graph g = theorem3_ls_graph(n, k);
        const IntPolynomial got = independence_polynomial(g);
        out.expect(g.size() == m && got == want && from_counts(oracle::independence(g)) == want,
                   "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + poly_text(got) +
                       " vs " + poly_text(want));
      } catch (const std::invalid_argument& e) {
        out.failures.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               ": no graph with the required deletions (" + e.what() + ")");
      }
    }
  }
  auto displayed = [](int a, int b) {
    return 2 * (a * (a - 1) * (a - 2) / 6) + b * (b - 1) * (b - 2) / 6;
  };
  {
    const Graph g = theorem3_fs_graph(3, 1);
    const auto brute = oracle::independence(g);
    const long long cubic = brute.size() > 3 ? brute[3] : 0;
    out.expect(cubic == displayed(3, 1),
               "a=3 b=1: x^3 coefficient " + std::to_string(cubic) + " vs " +
                   std::to_string(displayed(3, 1)));
  }
  {
    const Graph g = theorem3_fs_graph(2, 1);
    const auto brute = oracle::independence(g);
    const long long cubic = brute.size() > 3 ? brute[3] : 0;
    out.notes.push_back("a=2 b=1: x^3 coefficient " + std::to_string(cubic) + ", formula gives " +
                        std::to_string(displayed(2, 1)));
    const auto r = find_optimum({5, g.size(), 2, Objective::kLeast});
    out.notes.push_back("a=2 b=1: least search " + std::string(to_string(r.verdict)) +
                        (witness_has_class(r, g) ? ", 2K_2 u K_1 is a witness" : ", 2K_2 u K_1 is not a witness"));
  }
}

// 5. Matching graphs are optimally least for k = 2.
void matchings(Outcome& out) {
  int classes = 0;
  for (int n = 1; n <= 7; ++n) {
    for (int m = 0; 2 * m <= n; ++m, ++classes) {
      const Graph g = theorem4_graph(n, m);
      const auto r = find_optimum({n, m, 2, Objective::kLeast});
      out.expect(r.verdict == Verdict::kExists && witness_has_class(r, g),
                 tag(n, m) + ": " + std::string(to_string(r.verdict)));
    }
  }
  out.notes.push_back(std::to_string(classes) + " classes");
}

// 6. Edge move never increases the polynomial on [0, inf).
void edge_moves(Outcome& out) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> order(2, 8);
  int strict = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph g1 = oracle::random_graph(order(rng), 0.5, rng);
    if (g1.size() == 0) g1 = add_edge(g1, 0, 1);
    const auto edges = g1.edges();
    const Edge e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    const Graph h1 = disjoint_union(g1, empty_graph(2));
    const int y = g1.order();
    const Graph h2 = edge_move(h1, e, y, y + 1);
    const IntPolynomial p1 = independence_polynomial(h1);
    const IntPolynomial p2 = independence_polynomial(h2);
    const auto v = dominance(p1, p2);
    out.expect(p1 == from_counts(oracle::independence(h1)) &&
                   p2 == from_counts(oracle::independence(h2)),
               "trial " + std::to_string(trial) + ": oracle disagreement");
    out.expect(v.first_dominates(), "trial " + std::to_string(trial) + ": " +
                                        std::string(to_string(v.tag)) + " for " + poly_text(p1) +
                                        " vs " + poly_text(p2));
    if (v.tag != Dominance::kEqual) ++strict;
  }
  out.notes.push_back("200 trials, " + std::to_string(strict) + " strict");
}

// 7. Greatest-objective witness pair and the clique ratio.
void greatest_pair(Outcome& out) {
  const auto [g, h] = theorem5_pair(3, 3, 13);
  out.expect(g.size() == 72 && h.size() == 72,
             "sizes " + std::to_string(g.size()) + ", " + std::to_string(h.size()));
  const IntPolynomial pg = k_independence_polynomial(g, 3);
  const IntPolynomial ph = k_independence_polynomial(h, 3);
  out.expect(pg == from_counts(oracle::k_independence(g, 3)) &&
                 ph == from_counts(oracle::k_independence(h, 3)),
             "I_3 disagrees with the subset oracle");
  out.expect(r_value(g, 3) == 6 && r_value(h, 3) == 4,
             "r values " + std::to_string(r_value(g, 3)) + ", " + std::to_string(r_value(h, 3)));
  out.expect(ph[3] > pg[3], "i_3: H " + ph[3].str() + ", G " + pg[3].str());
  out.expect(compare_near_zero(ph, pg) == std::strong_ordering::greater, "near zero does not favour H");
  out.expect(compare_near_infinity(pg, ph) == std::strong_ordering::greater,
             "near infinity does not favour G");
  out.notes.push_back("I_3(G) = " + poly_text(pg));
  out.notes.push_back("I_3(H) = " + poly_text(ph));

  for (int l = 3; l <= 8; ++l) {
    out.expect(clique_ratio(l, 2) == 1, "l=" + std::to_string(l) + ": ratio at 2 is not 1");
    for (int i = 3; i <= choose2(l); ++i) {
      out.expect(clique_ratio(l, i) > 1, "l=" + std::to_string(l) + " i=" + std::to_string(i));
      out.expect(clique_ratio(l, i) > clique_ratio(l, i - 1),
                 "l=" + std::to_string(l) + " i=" + std::to_string(i) + ": not increasing");
    }
  }
}

// 8. Least objective fails for k = 3 on S(7,9).
void least_fails(Outcome& out) {
  const auto [pg, ph] = theorem6_pair(3, 7);
  for (int jobs : {1, 8}) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = find_optimum({7, 9, 3, Objective::kLeast}, {false, jobs, kDefaultBudget});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string label = std::to_string(jobs) + " worker" + (jobs == 1 ? "" : "s");
    out.notes.push_back(label + ": " + std::to_string(secs) + " s, " +
                        std::to_string(r.stats.graphs_examined) + " graphs");
    out.expect(secs < (jobs == 1 ? 600.0 : 120.0), label + ": too slow");
    out.expect(r.stats.graphs_examined == 293930, label + ": examined " +
                                                      std::to_string(r.stats.graphs_examined));
    if (r.verdict != Verdict::kNotExists || !r.refutation) {
      out.failures.push_back(label + ": verdict " + std::string(to_string(r.verdict)));
      continue;
    }
    const Graph& a = r.refutation->first.graph;
    const Graph& b = r.refutation->second.graph;
    const bool same = (oracle::isomorphic(a, pg) && oracle::isomorphic(b, ph)) ||
                      (oracle::isomorphic(a, ph) && oracle::isomorphic(b, pg));
    out.expect(same, label + ": refutation pair is not the expected one");
    out.expect(r.refutation->verdict.tag == Dominance::kCrosses, label + ": pair does not cross");
    out.expect(validate_report(r).empty(), label + ": report fails validation");
  }
  const auto tg = oracle::clique_counts(pg);
  const auto th = oracle::clique_counts(ph);
  out.expect(tg[3] == 7 && th[3] == 5,
             "triangles " + std::to_string(tg[3]) + " vs " + std::to_string(th[3]));
  const IntPolynomial ig = k_independence_polynomial(pg, 3);
  const IntPolynomial ih = k_independence_polynomial(ph, 3);
  out.expect(ig[3] == 28 && ih[3] == 30, "i_3 " + ig[3].str() + " vs " + ih[3].str());
}

// 9. Independent engines agree on every labelled graph with six vertices.
void cross_oracles(Outcome& out) {
  const int n = 6;
  std::uint64_t graphs = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << choose2(n)); ++mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++bit) {
        if (mask >> bit & 1) edges.emplace_back(u, v);
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    ++graphs;
    const IntPolynomial rec = independence_polynomial(g);
    const IntPolynomial sweep = k_independence_polynomial(g, 2);
    const IntPolynomial brute = from_counts(oracle::independence(g));
    const IntPolynomial cliques = from_counts(clique_counts(complement(g)));
    if (!(rec == sweep && sweep == brute && brute == cliques)) {
      out.failures.push_back("mask " + std::to_string(mask) + ": recursion " + poly_text(rec) +
                             ", sweep " + poly_text(sweep) + ", oracle " + poly_text(brute) +
                             ", complement cliques " + poly_text(cliques));
    }
  }
  out.notes.push_back(std::to_string(graphs) + " labelled graphs");
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: indopt_acceptance [--criterion N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "lex closed form", 10, closed_formula},
      {2, "lex graph is greatest", 60, lex_greatest},
      {3, "two-clique family is least", 300, two_cliques},
      {4, "deleted-edge and three-clique families", 10, three_cliques},
      {5, "matchings are least", 60, matchings},
      {6, "edge move", 60, edge_moves},
      {7, "greatest fails for k = 3", 6, greatest_pair},
      {8, "least fails for k = 3", 720, least_fails},
      {9, "cross-oracle identities", 120, cross_oracles},
  };

  bool all = true;
  bool ran = false;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_seconds) {
      out.failures.push_back("took " + std::to_string(secs) + " s, limit " +
                             std::to_string(c.limit_seconds) + " s");
    }
    const bool pass = out.failures.empty();
    all = all && pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << " (" << secs << " s) "
         << c.name;
    std::cout << line.str() << "\n";
    for (const auto& note : out.notes) std::cout << "    " << note << "\n";
    const std::size_t shown = std::min<std::size_t>(out.failures.size(), 10);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "    failed: " << out.failures[i] << "\n";
    if (out.failures.size() > shown) {
      std::cout << "    ... " << out.failures.size() - shown << " more\n";
    }
    std::cout.flush();
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all ? 0 : 1;
}
