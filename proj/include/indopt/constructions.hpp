#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indopt/graph.hpp"

namespace indopt {

/// Edges are the m lexicographically largest pairs when vertex 0 is the
/// largest: (0,1), (0,2), ..., (0,n-1), (1,2), ...
Graph lex_graph(int n, int m);

/// Balanced complete (k-1)-partite graph on n vertices; parts are
/// contiguous blocks, larger blocks first.
Graph turan_graph(int n, int k);

/// How the cross edges are picked when a family allows "any" choice.
struct EdgeChoice {
  /// Unset: lexicographic order. Set: a seeded shuffle of the candidates.
  std::optional<std::uint64_t> seed;
};

/// K_ceil(n/2) u K_floor(n/2) (big clique on the low vertices) plus
/// m - (C(n,2) - floor(n^2/4)) edges between the two cliques.
Graph theorem2_graph(int n, int m, EdgeChoice choice = {});

/// K_ceil(n/2) u K_floor(n/2) with k edges deleted inside the big clique:
/// a star K_{1,k} when it fits, otherwise a k-cycle (k >= 4). Throws when
/// no triangle-free set of k edges fits in the big clique.
Graph theorem3_ls_graph(int n, int k);
/// Same base graph with an explicit deletion set, which must be
/// triangle-free and inside the big clique.
Graph theorem3_ls_graph(int n, const std::vector<Edge>& deleted);

/// 2K_a u K_b for a >= b >= 1.
Graph theorem3_fs_graph(int a, int b);

/// mK_2 u (n - 2m)K_1.
Graph theorem4_graph(int n, int m);

/// G is the complement of (k-1)K_l u (n-(k-1)l)K_1, H the complement of
/// (k-1)C(l,2)K_2 u isolated vertices. Both have C(n,2) - (k-1)C(l,2) edges.
/// Requires k >= 3, l >= 3 and (k-1)l(l-1) < n <= 62.
std::pair<Graph, Graph> theorem5_pair(int k, int l, int n);

/// With c = C(k,2): G = (K_{c+2} - e) u (n-c-2)K_1, where e = (0,1), and
/// H = K_{c+1} u K_k u (n-c-1-k)K_1. Requires k >= 3, n >= c+k+1.
std::pair<Graph, Graph> theorem6_pair(int k, int n);

/// Removes edge e and joins the isolated vertices y and z.
Graph edge_move(const Graph& h1, Edge e, int y, int z);

enum class Family { kLex, kTuran, kTheorem2, kTheorem3Ls, kTheorem3Fs, kTheorem4,
                    kTheorem5Pair, kTheorem6Pair, kEdgeMove };

std::optional<Family> parse_family(std::string_view tag);
std::string_view to_string(Family f);

struct ConstructionSpec {
  Family family = Family::kLex;
  int n = 0;
  int m = 0;
  int k = 0;
  int l = 0;
  int a = 0;
  int b = 0;
  /// Edge-move input: the graph H1, the edge to move and the two isolated vertices.
  std::optional<Graph> base;
  Edge edge{0, 1};
  int y = 0;
  int z = 0;
};

/// One graph, or two for the witness-pair families.
std::vector<Graph> build(const ConstructionSpec& spec);

}  // namespace indopt
