#include <doctest.h>

#include <random>

#include "indopt/graph.hpp"
#include "oracles.hpp"

using namespace indopt;

namespace {

Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

GraphErrc code_of(auto&& f) {
  try {
    f();
  } catch (const GraphError& e) {
    return e.code();
  }
  FAIL("no GraphError thrown");
  return GraphErrc::kMalformed;
}

}  // namespace

TEST_CASE("empty and complete graphs") {
  CHECK(empty_graph(3).size() == 0);
  CHECK(empty_graph(1).order() == 1);
  CHECK(complement(empty_graph(4)) == complete_graph(4));
  CHECK(complete_graph(4).size() == 6);
  CHECK(code_of([] { empty_graph(0); }) == GraphErrc::kOrderOutOfRange);
  CHECK(code_of([] { empty_graph(63); }) == GraphErrc::kOrderOutOfRange);
  CHECK(Graph().is_null());
  CHECK(complete_graph(62).size() == 62 * 61 / 2);
}

TEST_CASE("add and delete edges report distinct errors") {
  CHECK(add_edge(empty_graph(2), 0, 1) == complete_graph(2));
  CHECK(delete_edge(complete_graph(3), 0, 1) == Graph::from_edges(3, {{0, 2}, {1, 2}}));
  CHECK(delete_edge(add_edge(path3(), 0, 2), 0, 2) == path3());
  CHECK(code_of([] { add_edge(empty_graph(3), 1, 1); }) == GraphErrc::kSelfLoop);
  CHECK(code_of([] { add_edge(path3(), 0, 1); }) == GraphErrc::kDuplicateEdge);
  CHECK(code_of([] { delete_edge(path3(), 0, 2); }) == GraphErrc::kMissingEdge);
  CHECK(code_of([] { add_edge(path3(), 0, 3); }) == GraphErrc::kVertexOutOfRange);
}

TEST_CASE("from_rows validates") {
  CHECK(Graph::from_rows(2, {0b10, 0b01}) == complete_graph(2));
  CHECK(code_of([] { Graph::from_rows(2, {0b10, 0b00}); }) == GraphErrc::kAsymmetric);
  CHECK(code_of([] { Graph::from_rows(2, {0b01, 0b00}); }) == GraphErrc::kSelfLoop);
  CHECK(code_of([] { Graph::from_rows(2, {0b110, 0b001}); }) == GraphErrc::kVertexOutOfRange);
  CHECK(code_of([] { Graph::from_edges(3, {{0, 1}, {1, 0}}); }) == GraphErrc::kDuplicateEdge);
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(5)) == empty_graph(5));
  CHECK(complement(complement(path3())) == path3());
  // K_{3,2} goes to K_3 u K_2.
  std::vector<Edge> bip;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 5; ++j) bip.emplace_back(i, j);
  }
  CHECK(complement(Graph::from_edges(5, bip)) == disjoint_union(complete_graph(3), complete_graph(2)));

  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 20;
    const Graph g = oracle::random_graph(n, 0.3, rng);
    CHECK(g.size() + complement(g).size() == n * (n - 1) / 2);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("union and join") {
  CHECK(join(complete_graph(2), complete_graph(3)) == complete_graph(5));
  const Graph h = disjoint_union(complete_graph(4), complete_graph(3));
  CHECK(h.order() == 7);
  CHECK(h.size() == 9);
  const Graph g = path3();
  const Graph j = join(g, empty_graph(4));
  CHECK(j.size() == g.size() + 0 + 3 * 4);
  CHECK(code_of([] { join(empty_graph(40), empty_graph(23)); }) == GraphErrc::kOrderOutOfRange);
}

TEST_CASE("induced subgraphs and neighbourhoods") {
  CHECK(closed_neighborhood(complete_graph(3), 0) == VertexSet::range(3));
  const Graph two = induced_subgraph(path3(), VertexSet(0b101));
  CHECK(two == empty_graph(2));
  CHECK(delete_vertex(complete_graph(6), 2) == complete_graph(5));
  CHECK(induced_subgraph(path3(), VertexSet()).is_null());
  CHECK(code_of([] { delete_vertex(path3(), 3); }) == GraphErrc::kVertexOutOfRange);
  CHECK(components(disjoint_union(path3(), complete_graph(2))).size() == 2);
}

TEST_CASE("clique detection and counting") {
  CHECK(contains_k_clique(complete_graph(3), VertexSet::range(3), 3));
  CHECK_FALSE(contains_k_clique(delete_edge(complete_graph(4), 0, 1), VertexSet::range(4), 4));
  // (K_5 - e) u 2K_1: the isolated vertices, both ends of e and one more vertex.
  const Graph g = disjoint_union(delete_edge(complete_graph(5), 0, 1), empty_graph(2));
  CHECK_FALSE(contains_k_clique(g, VertexSet(0b1100111), 3));
  CHECK(clique_counts(complete_graph(4)) == CliqueCounts{1, 4, 6, 4, 1});
  CHECK(clique_counts(delete_edge(complete_graph(5), 0, 1))[3] == 7);
  CHECK_THROWS_AS(contains_k_clique(g, g.vertices(), 0), std::invalid_argument);
  CHECK(k_cliques(complete_graph(5), 3).size() == 10);
}

TEST_CASE("clique counts agree with the subset oracle") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const Graph g = oracle::random_graph(1 + t % 12, 0.5, rng);
    const auto counts = clique_counts(g);
    auto expect = oracle::clique_counts(g);
    expect.resize(g.order() + 1, 0);
    REQUIRE(counts.size() == expect.size());
    for (std::size_t i = 0; i < counts.size(); ++i) CHECK(counts[i] == static_cast<std::uint64_t>(expect[i]));
  }
}

TEST_CASE("permute relabels") {
  const Graph g = path3();
  const Graph p = permute(g, {1, 0, 2});
  CHECK(p.size() == 2);
  CHECK(oracle::isomorphic(g, p));
}
