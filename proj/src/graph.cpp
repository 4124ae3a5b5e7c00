#include "indopt/graph.hpp"

#include <algorithm>

namespace indopt {
namespace {

void check_order(int n, bool allow_null = false) {
  if (n < (allow_null ? 0 : 1) || n > kMaxOrder) {
    throw GraphError(GraphErrc::kOrderOutOfRange,
                     "order " + std::to_string(n) + " outside [1, 62]");
  }
}

void check_pair(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) {
    throw GraphError(GraphErrc::kVertexOutOfRange,
                     "edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for order " + std::to_string(g.order()));
  }
  if (u == v) {
    throw GraphError(GraphErrc::kSelfLoop, "self-loop at vertex " + std::to_string(u));
  }
}

std::array<std::uint64_t, kMaxOrder> rows_of(const Graph& g) {
  std::array<std::uint64_t, kMaxOrder> rows{};
  for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v).bits();
  return rows;
}

void count_cliques(const Graph& g, VertexSet candidates, int depth, CliqueCounts& out) {
  for (int v : candidates) {
    ++out[depth + 1];
    // Only extend with higher-numbered vertices so each clique is counted once.
    VertexSet higher(candidates.bits() & ~((2ULL << v) - 1));
    count_cliques(g, higher & g.neighbors(v), depth + 1, out);
  }
}

void collect_cliques(const Graph& g, VertexSet candidates, VertexSet current, int missing,
                     std::vector<VertexSet>& out) {
  if (missing == 0) {
    out.push_back(current);
    return;
  }
  for (int v : candidates) {
    if (candidates.size() < missing) return;
    candidates = candidates.without(v);
    collect_cliques(g, candidates & g.neighbors(v), current.with(v), missing - 1, out);
  }
}

}  // namespace

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

Graph make_graph_unchecked(int n, const std::uint64_t* rows) {
  Graph g;
  g.n_ = n;
  std::copy(rows, rows + n, g.rows_.begin());
  return g;
}

Graph Graph::from_rows(int n, const std::vector<std::uint64_t>& rows) {
  check_order(n, /*allow_null=*/true);
  if (static_cast<int>(rows.size()) != n) {
    throw GraphError(GraphErrc::kMalformed, "expected " + std::to_string(n) + " rows");
  }
  const std::uint64_t mask = VertexSet::range(n).bits();
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~mask) {
      throw GraphError(GraphErrc::kVertexOutOfRange, "row " + std::to_string(v) +
                                                         " references vertex >= order");
    }
    if ((rows[v] >> v) & 1ULL) {
      throw GraphError(GraphErrc::kSelfLoop, "self-loop at vertex " + std::to_string(v));
    }
    for (int u : VertexSet(rows[v])) {
      if (!((rows[u] >> v) & 1ULL)) {
        throw GraphError(GraphErrc::kAsymmetric, "adjacency not symmetric at (" +
                                                     std::to_string(v) + "," +
                                                     std::to_string(u) + ")");
      }
    }
  }
  return make_graph_unchecked(n, rows.data());
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g = empty_graph(n);
  for (auto [u, v] : edges) {
    check_pair(g, u, v);
    if (g.has_edge(u, v)) {
      throw GraphError(GraphErrc::kDuplicateEdge, "duplicate edge (" + std::to_string(u) +
                                                      "," + std::to_string(v) + ")");
    }
    g.rows_[u] |= 1ULL << v;
    g.rows_[v] |= 1ULL << u;
  }
  return g;
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : VertexSet(rows_[u] & ~((2ULL << u) - 1))) out.emplace_back(u, v);
  }
  return out;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && std::equal(rows_.begin(), rows_.begin() + n_, o.rows_.begin());
}

Graph empty_graph(int n) {
  check_order(n);
  std::array<std::uint64_t, kMaxOrder> rows{};
  return make_graph_unchecked(n, rows.data());
}

Graph complete_graph(int n) { return complement(empty_graph(n)); }

Graph add_edge(const Graph& g, int u, int v) {
  check_pair(g, u, v);
  if (g.has_edge(u, v)) {
    throw GraphError(GraphErrc::kDuplicateEdge, "edge (" + std::to_string(u) + "," +
                                                    std::to_string(v) + ") already present");
  }
  auto rows = rows_of(g);
  rows[u] |= 1ULL << v;
  rows[v] |= 1ULL << u;
  return make_graph_unchecked(g.order(), rows.data());
}

Graph delete_edge(const Graph& g, int u, int v) {
  check_pair(g, u, v);
  if (!g.has_edge(u, v)) {
    throw GraphError(GraphErrc::kMissingEdge, "edge (" + std::to_string(u) + "," +
                                                  std::to_string(v) + ") not present");
  }
  auto rows = rows_of(g);
  rows[u] &= ~(1ULL << v);
  rows[v] &= ~(1ULL << u);
  return make_graph_unchecked(g.order(), rows.data());
}

Graph complement(const Graph& g) {
  const std::uint64_t all = g.vertices().bits();
  std::array<std::uint64_t, kMaxOrder> rows{};
  for (int v = 0; v < g.order(); ++v) {
    rows[v] = all & ~g.neighbors(v).bits() & ~(1ULL << v);
  }
  return make_graph_unchecked(g.order(), rows.data());
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross) {
  const int n = g.order() + h.order();
  if (n > kMaxOrder) {
    throw GraphError(GraphErrc::kOrderOutOfRange,
                     "combined order " + std::to_string(n) + " exceeds 62");
  }
  const int shift = g.order();
  const std::uint64_t g_mask = g.vertices().bits();
  const std::uint64_t h_mask = h.vertices().bits() << shift;
  std::array<std::uint64_t, kMaxOrder> rows{};
  for (int v = 0; v < g.order(); ++v) {
    rows[v] = g.neighbors(v).bits() | (cross ? h_mask : 0);
  }
  for (int v = 0; v < h.order(); ++v) {
    rows[shift + v] = (h.neighbors(v).bits() << shift) | (cross ? g_mask : 0);
  }
  return make_graph_unchecked(n, rows.data());
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }
Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!g.vertices().contains(s)) {
    throw GraphError(GraphErrc::kVertexOutOfRange, "vertex set exceeds graph order");
  }
  return permute(g, s.to_vector());
}

Graph permute(const Graph& g, const std::vector<int>& order) {
  std::array<int, kMaxOrder> position{};
  position.fill(-1);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  std::array<std::uint64_t, kMaxOrder> rows{};
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::uint64_t row = 0;
    for (int u : g.neighbors(order[i])) {
      if (position[u] >= 0) row |= 1ULL << position[u];
    }
    rows[i] = row;
  }
  return make_graph_unchecked(static_cast<int>(order.size()), rows.data());
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw GraphError(GraphErrc::kVertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  }
  return induced_subgraph(g, g.vertices().without(v));
}

VertexSet closed_neighborhood(const Graph& g, int v) { return g.neighbors(v).with(v); }

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = (next & rest) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (int v : s) {
    if (!g.neighbors(v).contains(s.without(v))) return false;
  }
  return true;
}

bool contains_k_clique(const Graph& g, VertexSet s, int k) {
  if (k < 1) throw std::invalid_argument("clique order must be at least 1");
  if (!g.vertices().contains(s)) {
    throw GraphError(GraphErrc::kVertexOutOfRange, "vertex set exceeds graph order");
  }
  struct Search {
    const Graph& g;
    bool run(VertexSet candidates, int missing) const {
      if (missing == 0) return true;
      for (int v : candidates) {
        if (candidates.size() < missing) return false;
        candidates = candidates.without(v);
        if (run(candidates & g.neighbors(v), missing - 1)) return true;
      }
      return false;
    }
  };
  return Search{g}.run(s, k);
}

std::vector<VertexSet> k_cliques(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique order must be at least 1");
  std::vector<VertexSet> out;
  collect_cliques(g, g.vertices(), VertexSet(), k, out);
  return out;
}

CliqueCounts clique_counts(const Graph& g) {
  CliqueCounts out(g.order() + 1, 0);
  out[0] = 1;
  count_cliques(g, g.vertices(), 0, out);
  return out;
}

}  // namespace indopt
