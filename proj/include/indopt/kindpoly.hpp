#pragma once

#include "indopt/graph.hpp"
#include "indopt/polynomial.hpp"

namespace indopt {

/// I_k(G, x): coefficient j counts j-subsets inducing no K_k. I_2 = I.
///
/// The k-cliques are listed once; each of the 2^n subsets is counted unless
/// it contains one of them. `workers` > 1 splits the subset range across
/// threads and sums the partial counts. Requires k >= 2 and n <= 25.
IntPolynomial k_independence_polynomial(const Graph& g, int k, int workers = 1);

/// Largest order of an induced K_k-free subgraph: the degree of I_k(G, x).
int r_value(const Graph& g, int k);

/// Clique counts of a join: the convolution of the two count vectors.
CliqueCounts join_clique_counts(const CliqueCounts& a, const CliqueCounts& b);

/// Ratio of i-clique counts between the complements of K_l + l(l-2)K_1 and
/// C(l,2)K_2:
///   (C(l(l-2), i) + l C(l(l-2), i-1)) / (C(C(l,2), i) 2^i).
/// Requires l >= 3 and 2 <= i <= C(l,2); at l = 2 both graphs coincide and
/// the ratio is 0/0. Throws std::domain_error outside that range.
Rational clique_ratio(int l, int i);

}  // namespace indopt
