#include "indopt/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "indopt/canonical.hpp"
#include "indopt/constructions.hpp"
#include "indopt/graph_io.hpp"
#include "indopt/indpoly.hpp"
#include "indopt/kindpoly.hpp"

namespace indopt {
namespace {

int choose2(int n) { return n * (n - 1) / 2; }

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string nm(int n, int m) {
  return "S(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

class Checker {
 public:
  explicit Checker(TheoremTag tag) { report_.tag = tag; }

  void note(std::string line) { report_.evidence.push_back(std::move(line)); }
  void check(bool ok, const std::string& what) {
    if (ok) {
      report_.evidence.push_back("ok: " + what);
    } else {
      report_.failures.push_back(what);
    }
  }
  /// Silent on success; keeps sweeps from flooding the evidence list.
  bool quiet(bool ok, const std::string& what) {
    if (!ok) report_.failures.push_back(what);
    return ok;
  }

  VerificationReport finish() {
    report_.passed = report_.failures.empty();
    return std::move(report_);
  }

 private:
  VerificationReport report_;
};

bool witness_class_contains(const OptimalityReport& r, const Graph& g) {
  const std::string form = canonical_form(g);
  return std::any_of(r.witnesses.begin(), r.witnesses.end(),
                     [&](const PolyGraph& w) { return canonical_form(w.graph) == form; });
}

bool coefficientwise_ge(const IntPolynomial& f, const IntPolynomial& g) {
  return all_coefficients_nonnegative(f - g);
}

/// find_optimum plus a check that `expected` lies in the witness classes.
/// Returns false when the class is over budget (noted, not failed).
bool search_confirms(Checker& c, const ClassSpec& spec, const Graph& expected,
                     const std::string& name, const SearchOptions& options) {
  const std::string where = nm(spec.n, spec.m) + " k=" + std::to_string(spec.k) + " " +
                            std::string(to_string(spec.objective));
  const OptimalityReport r = find_optimum(spec, options);
  if (r.verdict == Verdict::kBudgetExceeded) {
    c.note("skipped: " + where + " has " + std::to_string(r.stats.class_size) +
           " labelled graphs, over budget");
    return false;
  }
  c.quiet(validate_report(r).empty(), where + ": report fails re-validation");
  c.check(r.verdict == Verdict::kExists && witness_class_contains(r, expected),
          where + ": search over " + std::to_string(r.stats.graphs_examined) +
              " graphs finds " + std::string(to_string(r.verdict)) + " with " + name +
              " optimal");
  return true;
}

VerificationReport verify_theorem1(const VerifyParams& p) {
  require(p.n.has_value(), "thm1 needs --n");
  const int n = *p.n;
  require(n >= 1 && n <= 12, "thm1 needs 1 <= n <= 12");
  Checker c(TheoremTag::kTheorem1);
  const int lo = p.m.value_or(0);
  const int hi = p.m.value_or(choose2(n));
  require(lo >= 0 && hi <= choose2(n), "thm1 needs 0 <= m <= C(n,2)");
  for (int m = lo; m <= hi; ++m) {
    const Graph lex = lex_graph(n, m);
    const IntPolynomial f = independence_polynomial(lex);
    c.quiet(f == lex_polynomial_closed(n, m), nm(n, m) + ": closed form disagrees with the lex graph");
    c.quiet(f == independence_polynomial_oracle(lex), nm(n, m) + ": recursion disagrees with subset count");
    if (class_size(n, m) > p.search.budget) {
      c.note("skipped: " + nm(n, m) + " over budget");
      continue;
    }
    std::uint64_t beaten = 0;
    for_each_in_class(n, m, false, p.search.budget, [&](const Graph& g, std::uint64_t rank) {
      if (!coefficientwise_ge(f, independence_polynomial(g))) {
        if (beaten++ == 0) {
          c.quiet(false, nm(n, m) + ": lex graph not coefficientwise >= rank " + std::to_string(rank));
        }
      }
    });
    const OptimalityReport r = find_optimum({n, m, 2, Objective::kGreatest}, p.search);
    c.quiet(validate_report(r).empty(), nm(n, m) + ": report fails re-validation");
    c.quiet(r.verdict == Verdict::kExists && witness_class_contains(r, lex),
            nm(n, m) + ": search does not return the lex class");
  }
  c.note("swept m = " + std::to_string(lo) + ".." + std::to_string(hi) + " at n = " +
         std::to_string(n) + ": closed form, subset count, coefficientwise and search checks");
  return c.finish();
}

VerificationReport verify_theorem2(const VerifyParams& p) {
  require(p.n.has_value(), "thm2 needs --n");
  const int n = *p.n;
  require(n >= 2 && n <= kMaxOrder, "thm2 needs 2 <= n <= 62");
  const int threshold = choose2(n) - n * n / 4;
  const int lo = p.m.value_or(threshold);
  const int hi = p.m.value_or(choose2(n));
  require(lo >= threshold && hi <= choose2(n), "thm2 needs C(n,2) - floor(n^2/4) <= m <= C(n,2)");
  Checker c(TheoremTag::kTheorem2);
  for (int m = lo; m <= hi; ++m) {
    const IntPolynomial expected{1, n, choose2(n) - m};
    const Graph g = theorem2_graph(n, m);
    const IntPolynomial f = independence_polynomial(g);
    c.check(f == expected, nm(n, m) + ": I = " + to_string(f));
    for (std::uint64_t s = 0; s < 3; ++s) {
      const Graph alt = theorem2_graph(n, m, EdgeChoice{p.seed + s});
      c.quiet(independence_polynomial(alt) == expected,
              nm(n, m) + ": shuffled cross edges (seed " + std::to_string(p.seed + s) +
                  ") change the polynomial");
    }
    search_confirms(c, {n, m, 2, Objective::kLeast}, g, "the two-clique graph", p.search);
  }
  return c.finish();
}

VerificationReport verify_theorem3(const VerifyParams& p) {
  Checker c(TheoremTag::kTheorem3);
  if (p.n) {
    const int n = *p.n;
    require(n >= 2 && n <= kMaxOrder, "thm3 needs 2 <= n <= 62");
    const int lo = p.k.value_or(1);
    const int hi = p.k.value_or(n / 2);
    require(lo >= 1 && hi <= n / 2, "thm3 needs 1 <= k <= floor(n/2)");
    for (int k = lo; k <= hi; ++k) {
      const int m = choose2(n) - ((n + 1) / 2) * (n / 2) - k;
      const std::string where = nm(n, m) + " k=" + std::to_string(k);
      Graph g;
      try {
        g = theorem3_ls_graph(n, k);
      } catch (const std::invalid_argument& e) {
        c.quiet(false, where + ": no construction: " + e.what());
        continue;
      }
      const IntPolynomial expected{1, n, choose2(n) - m, k * (n / 2)};
      const IntPolynomial f = independence_polynomial(g);
      c.check(f == expected && f == independence_polynomial_oracle(g),
              where + ": I = " + to_string(f) + ", expected " + to_string(expected));
      search_confirms(c, {n, m, 2, Objective::kLeast}, g, "the deleted-edge graph", p.search);
    }
  }
  const int a = p.a;
  const int b = p.b;
  require(a >= b && b >= 1, "thm3 needs a >= b >= 1");
  const Graph fs = theorem3_fs_graph(a, b);
  const int n = 2 * a + b;
  const int m = a * (a - 1) + b * (b - 1) / 2;
  const IntPolynomial f = independence_polynomial(fs);
  const BigInt displayed = 2 * binomial(a, 3) + binomial(b, 3);
  const IntPolynomial expected{1, n, choose2(n) - m};
  const IntPolynomial with_cubic = expected + IntPolynomial::monomial(displayed, 3);
  const std::string where = "2K_" + std::to_string(a) + " u K_" + std::to_string(b);
  c.quiet(f == independence_polynomial_oracle(fs), where + ": recursion disagrees with subset count");
  c.note(where + ": I = " + to_string(f) + "; x^3 coefficient " + f[3].str() +
         " (a^2 b = " + std::to_string(a * a * b) + ")");
  c.check(f == with_cubic, where + ": x^3 coefficient " + f[3].str() +
                               " vs 2C(a,3)+C(b,3) = " + displayed.str());
  search_confirms(c, {n, m, 2, Objective::kLeast}, fs, where, p.search);
  return c.finish();
}

VerificationReport verify_theorem4(const VerifyParams& p) {
  require(p.n.has_value(), "thm4 needs --n");
  const int n = *p.n;
  require(n >= 2 && n <= kMaxOrder, "thm4 needs 2 <= n <= 62");
  const int lo = p.m.value_or(0);
  const int hi = p.m.value_or(n / 2);
  require(lo >= 0 && 2 * hi <= n, "thm4 needs 0 <= m <= n/2");
  Checker c(TheoremTag::kTheorem4);
  for (int m = lo; m <= hi; ++m) {
    const Graph g = theorem4_graph(n, m);
    const IntPolynomial expected = pow(IntPolynomial{1, 2}, m) * binomial_power(n - 2 * m);
    c.quiet(independence_polynomial(g) == expected, nm(n, m) + ": I is not (1+2x)^m (1+x)^(n-2m)");
    search_confirms(c, {n, m, 2, Objective::kLeast}, g, "the matching graph", p.search);
  }
  return c.finish();
}

VerificationReport verify_theorem5(const VerifyParams& p) {
  const int k = p.k.value_or(3);
  const int l = p.l;
  const int n = p.n.value_or((k - 1) * l * (l - 1) + 1);
  Checker c(TheoremTag::kTheorem5);
  const auto [g, h] = theorem5_pair(k, l, n);
  const int m = choose2(n) - (k - 1) * choose2(l);
  c.check(g.size() == m && h.size() == m && g.order() == n && h.order() == n,
          "both graphs lie in " + nm(n, m));
  c.check(canonical_form(g) != canonical_form(h), "the two graphs are not isomorphic");
  const IntPolynomial fg = k_independence_polynomial(g, k);
  const IntPolynomial fh = k_independence_polynomial(h, k);
  c.note("I_" + std::to_string(k) + "(G) = " + to_string(fg));
  c.note("I_" + std::to_string(k) + "(H) = " + to_string(fh));
  const int rg = fg.degree();
  const int rh = fh.degree();
  c.check(rg == (k - 1) * l && rg > rh,
          "r_G = " + std::to_string(rg) + " > r_H = " + std::to_string(rh));
  c.check(fh[k] > fg[k], "i_k(H) = " + fh[k].str() + " > i_k(G) = " + fg[k].str());
  c.check(compare_near_zero(fh, fg) > 0, "H is greater near 0");
  c.check(compare_near_infinity(fg, fh) > 0, "G is greater near infinity");
  const DominanceVerdict v = dominance(fg, fh);
  c.check(v.tag == Dominance::kCrosses,
          "dominance(G, H) = " + std::string(to_string(v.tag)) +
              (v.x_lo ? " at " + to_string(*v.x_lo) + ", " + to_string(*v.x_hi) : std::string()));
  if (class_size(n, m) > p.search.budget) {
    c.note("skipped: exhaustive search of " + nm(n, m) + ", over budget");
  }

  for (int ll = 3; ll <= 8; ++ll) {
    const int top = choose2(ll);
    c.quiet(clique_ratio(ll, 2) == 1, "f(" + std::to_string(ll) + ",2) != 1");
    for (int i = 3; i <= top; ++i) {
      c.quiet(clique_ratio(ll, i) > clique_ratio(ll, i - 1),
              "f(" + std::to_string(ll) + "," + std::to_string(i) + ") does not increase");
    }
  }
  c.note("f(l,2) = 1 and f(l,i) increasing in i for l = 3..8");
  for (int ll = 3; ll <= 4; ++ll) {
    const int big = ll * (ll - 2);
    const CliqueCounts c1 = clique_counts(
        complement(disjoint_union(complete_graph(ll), empty_graph(big))));
    const CliqueCounts c2 = clique_counts(complement(theorem4_graph(2 * choose2(ll), choose2(ll))));
    for (int i = 2; i <= choose2(ll); ++i) {
      const BigInt n1 = binomial(big, i) + ll * binomial(big, i - 1);
      const BigInt n2 = binomial(choose2(ll), i) << i;
      const auto at = [](const CliqueCounts& cc, int i) {
        return i < static_cast<int>(cc.size()) ? BigInt(cc[i]) : BigInt(0);
      };
      c.quiet(at(c1, i) == n1 && at(c2, i) == n2,
              "l=" + std::to_string(ll) + ", i=" + std::to_string(i) +
                  ": clique counts disagree with the counting formulas");
    }
  }
  c.note("clique-count formulas match direct counts for l = 3, 4");
  return c.finish();
}

VerificationReport verify_theorem6(const VerifyParams& p) {
  const int k = p.k.value_or(3);
  const int c2 = choose2(k);
  const int n = p.n.value_or(c2 + k + 1);
  Checker c(TheoremTag::kTheorem6);
  const auto [g, h] = theorem6_pair(k, n);
  const int m = choose2(c2 + 2) - 1;
  c.check(g.size() == m && h.size() == m, "both graphs lie in " + nm(n, m));
  c.check(canonical_form(g) != canonical_form(h), "the two graphs are not isomorphic");
  const IntPolynomial fg = k_independence_polynomial(g, k);
  const IntPolynomial fh = k_independence_polynomial(h, k);
  c.note("I_" + std::to_string(k) + "(G) = " + to_string(fg));
  c.note("I_" + std::to_string(k) + "(H) = " + to_string(fh));
  c.check(compare_near_zero(fg, fh) < 0, "G is smaller near 0");
  c.check(compare_near_infinity(fg, fh) > 0, "H is smaller near infinity");

  const ClassSpec spec{n, m, k, Objective::kLeast};
  const OptimalityReport r = find_optimum(spec, p.search);
  if (r.verdict == Verdict::kBudgetExceeded) {
    c.note("skipped: exhaustive search of " + nm(n, m) + ", over budget");
    return c.finish();
  }
  c.quiet(validate_report(r).empty(), "search report fails re-validation");
  c.check(r.verdict == Verdict::kNotExists,
          "search over " + std::to_string(r.stats.graphs_examined) + " graphs: " +
              std::string(to_string(r.verdict)));
  if (r.refutation) {
    const Refutation& ref = *r.refutation;
    c.check(canonical_form(ref.first.graph) == canonical_form(g) &&
                canonical_form(ref.second.graph) == canonical_form(h),
            "refutation pair " + graph6_encode(ref.first.graph) + ", " +
                graph6_encode(ref.second.graph) + " matches the constructed pair");
    const CliqueCounts cg = clique_counts(ref.first.graph);
    const CliqueCounts ch = clique_counts(ref.second.graph);
    auto at = [](const CliqueCounts& cc, int i) {
      return i < static_cast<int>(cc.size()) ? cc[i] : std::uint64_t{0};
    };
    c.note(std::to_string(k) + "-clique counts " + std::to_string(at(cg, k)) + " vs " +
           std::to_string(at(ch, k)) + "; i_k " + ref.first.polynomial[k].str() + " vs " +
           ref.second.polynomial[k].str());
  }
  return c.finish();
}

Graph random_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

VerificationReport verify_lemma4(const VerifyParams& p) {
  require(p.trials >= 1, "lemma4 needs at least one trial");
  require(p.max_n >= 4 && p.max_n <= kMaxOrder, "lemma4 needs 4 <= max-n <= 62");
  Checker c(TheoremTag::kLemma4);
  std::mt19937_64 rng(p.seed);
  int strict = 0;
  for (int t = 0; t < p.trials; ++t) {
    const int inner = std::uniform_int_distribution<int>(2, p.max_n - 2)(rng);
    Graph g1 = random_graph(inner, rng);
    if (g1.size() == 0) g1 = add_edge(g1, 0, 1);
    const auto edges = g1.edges();
    const Edge e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    const Graph h1 = disjoint_union(g1, empty_graph(2));
    const Graph h2 = edge_move(h1, e, inner, inner + 1);
    const DominanceVerdict v = dominance(independence_polynomial(h1), independence_polynomial(h2));
    if (v.tag != Dominance::kEqual) ++strict;
    c.quiet(v.first_dominates(), "trial " + std::to_string(t) + ": " + graph6_encode(h1) +
                                     " edge (" + std::to_string(e.first) + "," +
                                     std::to_string(e.second) + ") gives " +
                                     std::string(to_string(v.tag)));
  }
  c.note(std::to_string(p.trials) + " seeded edge moves (seed " + std::to_string(p.seed) +
         ", n <= " + std::to_string(p.max_n) + "): I(H2) <= I(H1) on [0, inf) every time, " +
         std::to_string(strict) + " strictly");
  return c.finish();
}

}  // namespace

std::optional<TheoremTag> parse_theorem(std::string_view tag) {
  for (TheoremTag t : {TheoremTag::kTheorem1, TheoremTag::kTheorem2, TheoremTag::kTheorem3,
                       TheoremTag::kTheorem4, TheoremTag::kTheorem5, TheoremTag::kTheorem6,
                       TheoremTag::kLemma4}) {
    if (to_string(t) == tag) return t;
  }
  return std::nullopt;
}

std::string_view to_string(TheoremTag t) {
  switch (t) {
    case TheoremTag::kTheorem1: return "thm1";
    case TheoremTag::kTheorem2: return "thm2";
    case TheoremTag::kTheorem3: return "thm3";
    case TheoremTag::kTheorem4: return "thm4";
    case TheoremTag::kTheorem5: return "thm5";
    case TheoremTag::kTheorem6: return "thm6";
    case TheoremTag::kLemma4: return "lemma4";
  }
  return "?";
}

VerificationReport verify_theorem(TheoremTag tag, const VerifyParams& params) {
  switch (tag) {
    case TheoremTag::kTheorem1: return verify_theorem1(params);
    case TheoremTag::kTheorem2: return verify_theorem2(params);
    case TheoremTag::kTheorem3: return verify_theorem3(params);
    case TheoremTag::kTheorem4: return verify_theorem4(params);
    case TheoremTag::kTheorem5: return verify_theorem5(params);
    case TheoremTag::kTheorem6: return verify_theorem6(params);
    case TheoremTag::kLemma4: return verify_lemma4(params);
  }
  throw std::invalid_argument("unknown theorem tag");
}

ExplorationReport explore_least(int max_n, const SearchOptions& options) {
  require(max_n >= 1 && max_n <= kMaxOrder, "explore needs 1 <= max-n <= 62");
  ExplorationReport out;
  out.max_n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 0; m <= choose2(n); ++m) {
      const OptimalityReport r = find_optimum({n, m, 2, Objective::kLeast}, options);
      if (r.verdict == Verdict::kBudgetExceeded) {
        ++out.classes_skipped;
        continue;
      }
      ++out.classes_checked;
      if (r.verdict == Verdict::kNotExists) out.counterexamples.push_back(r);
    }
  }
  return out;
}

}  // namespace indopt
