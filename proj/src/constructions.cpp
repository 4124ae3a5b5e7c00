#include "indopt/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace indopt {
namespace {

int choose2(int n) { return n * (n - 1) / 2; }

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

Graph cliques_and_isolated(const std::vector<int>& clique_orders, int isolated) {
  std::vector<Edge> edges;
  int base = 0;
  for (int size : clique_orders) {
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) edges.emplace_back(base + i, base + j);
    }
    base += size;
  }
  return Graph::from_edges(base + isolated, edges);
}

Graph two_cliques(int n) {
  return cliques_and_isolated({(n + 1) / 2, n / 2}, 0);
}

bool triangle_free(const std::vector<Edge>& edges, int order) {
  return !contains_k_clique(Graph::from_edges(order, edges), VertexSet::range(order), 3);
}

}  // namespace

Graph lex_graph(int n, int m) {
  require(n >= 1 && n <= kMaxOrder, "lex graph order must be in [1, 62]");
  require(m >= 0 && m <= choose2(n), "lex graph size must be in [0, C(n,2)]");
  std::vector<Edge> edges;
  for (int i = 0; i < n && static_cast<int>(edges.size()) < m; ++i) {
    for (int j = i + 1; j < n && static_cast<int>(edges.size()) < m; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph turan_graph(int n, int k) {
  require(k >= 2, "Turan graph needs k >= 2");
  require(n >= 1 && n <= kMaxOrder, "Turan graph order must be in [1, 62]");
  const int parts = k - 1;
  std::vector<int> part(n);
  int v = 0;
  for (int p = 0; p < parts; ++p) {
    const int size = n / parts + (p < n % parts ? 1 : 0);
    for (int i = 0; i < size; ++i) part[v++] = p;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (part[i] != part[j]) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph theorem2_graph(int n, int m, EdgeChoice choice) {
  require(n >= 2 && n <= kMaxOrder, "two-clique graph needs 2 <= n <= 62");
  const int threshold = choose2(n) - (n * n) / 4;
  require(m >= threshold && m <= choose2(n),
          "two-clique graph needs C(n,2) - floor(n^2/4) <= m <= C(n,2)");
  const int big = (n + 1) / 2;
  std::vector<Edge> cross;
  for (int i = 0; i < big; ++i) {
    for (int j = big; j < n; ++j) cross.emplace_back(i, j);
  }
  if (choice.seed) {
    std::mt19937_64 rng(*choice.seed);
    std::shuffle(cross.begin(), cross.end(), rng);
  }
  Graph g = two_cliques(n);
  for (int e = 0; e < m - threshold; ++e) g = add_edge(g, cross[e].first, cross[e].second);
  return g;
}

Graph theorem3_ls_graph(int n, int k) {
  require(n >= 2 && n <= kMaxOrder, "deleted-edge graph needs 2 <= n <= 62");
  require(k >= 1 && k <= n / 2, "deleted-edge graph needs 1 <= k <= floor(n/2)");
  const int big = (n + 1) / 2;
  std::vector<Edge> deleted;
  if (k <= big - 1) {
    for (int leaf = 1; leaf <= k; ++leaf) deleted.emplace_back(0, leaf);
  } else {
    require(k >= 4 && k <= big,
            "no triangle-free set of " + std::to_string(k) + " edges fits in K_" +
                std::to_string(big));
    for (int i = 0; i < k; ++i) deleted.emplace_back(std::min(i, (i + 1) % k), std::max(i, (i + 1) % k));
  }
  return theorem3_ls_graph(n, deleted);
}

Graph theorem3_ls_graph(int n, const std::vector<Edge>& deleted) {
  require(n >= 2 && n <= kMaxOrder, "deleted-edge graph needs 2 <= n <= 62");
  const int big = (n + 1) / 2;
  for (auto [u, v] : deleted) {
    require(u >= 0 && v >= 0 && u < big && v < big && u != v,
            "deleted edges must lie inside the larger clique");
  }
  require(triangle_free(deleted, big), "deleted edges must be triangle-free");
  Graph g = two_cliques(n);
  for (auto [u, v] : deleted) g = delete_edge(g, u, v);
  return g;
}

Graph theorem3_fs_graph(int a, int b) {
  require(a >= b && b >= 1, "Fisher-Solow graph needs a >= b >= 1");
  require(2 * a + b <= kMaxOrder, "Fisher-Solow graph order exceeds 62");
  return cliques_and_isolated({a, a, b}, 0);
}

Graph theorem4_graph(int n, int m) {
  require(n >= 1 && n <= kMaxOrder, "matching graph needs 1 <= n <= 62");
  require(m >= 0 && 2 * m <= n, "matching graph needs 0 <= m <= n/2");
  return cliques_and_isolated(std::vector<int>(m, 2), n - 2 * m);
}

std::pair<Graph, Graph> theorem5_pair(int k, int l, int n) {
  require(k >= 3, "greatest-witness pair needs k >= 3");
  require(l >= 3, "greatest-witness pair needs l >= 3 (l = 2 gives two identical graphs)");
  require(n > (k - 1) * l * (l - 1), "greatest-witness pair needs n > (k-1)l(l-1)");
  require(n <= kMaxOrder, "greatest-witness pair order exceeds 62");
  const Graph g_bar = cliques_and_isolated(std::vector<int>(k - 1, l), n - (k - 1) * l);
  const int matched = (k - 1) * choose2(l);
  const Graph h_bar = cliques_and_isolated(std::vector<int>(matched, 2), n - 2 * matched);
  return {complement(g_bar), complement(h_bar)};
}

std::pair<Graph, Graph> theorem6_pair(int k, int n) {
  require(k >= 3, "least-witness pair needs k >= 3");
  const int c = choose2(k);
  require(n >= c + k + 1, "least-witness pair needs n >= C(k,2) + k + 1");
  require(n <= kMaxOrder, "least-witness pair order exceeds 62");
  const Graph g = delete_edge(cliques_and_isolated({c + 2}, n - c - 2), 0, 1);
  const Graph h = cliques_and_isolated({c + 1, k}, n - c - 1 - k);
  return {g, h};
}

Graph edge_move(const Graph& h1, Edge e, int y, int z) {
  const auto [v, w] = e;
  const int n = h1.order();
  for (int x : {v, w, y, z}) require(x >= 0 && x < n, "edge move vertex out of range");
  require(y != z && y != v && y != w && z != v && z != w,
          "edge move needs y, z distinct from each other and from e");
  require(h1.has_edge(v, w), "edge move needs e to be an edge of H1");
  require(h1.degree(y) == 0 && h1.degree(z) == 0, "edge move needs y and z isolated in H1");
  return add_edge(delete_edge(h1, v, w), y, z);
}

namespace {

constexpr std::pair<Family, std::string_view> kFamilyTags[] = {
    {Family::kLex, "lex"},
    {Family::kTuran, "turan"},
    {Family::kTheorem2, "thm2"},
    {Family::kTheorem3Ls, "thm3-ls"},
    {Family::kTheorem3Fs, "thm3-fs"},
    {Family::kTheorem4, "thm4"},
    {Family::kTheorem5Pair, "thm5"},
    {Family::kTheorem6Pair, "thm6"},
    {Family::kEdgeMove, "edge-move"},
};

}  // namespace

std::optional<Family> parse_family(std::string_view tag) {
  for (auto [family, name] : kFamilyTags) {
    if (name == tag) return family;
  }
  return std::nullopt;
}

std::string_view to_string(Family f) {
  for (auto [family, name] : kFamilyTags) {
    if (family == f) return name;
  }
  return "?";
}

std::vector<Graph> build(const ConstructionSpec& s) {
  switch (s.family) {
    case Family::kLex: return {lex_graph(s.n, s.m)};
    case Family::kTuran: return {turan_graph(s.n, s.k)};
    case Family::kTheorem2: return {theorem2_graph(s.n, s.m)};
    case Family::kTheorem3Ls: return {theorem3_ls_graph(s.n, s.k)};
    case Family::kTheorem3Fs: return {theorem3_fs_graph(s.a, s.b)};
    case Family::kTheorem4: return {theorem4_graph(s.n, s.m)};
    case Family::kTheorem5Pair: {
      auto [g, h] = theorem5_pair(s.k, s.l, s.n);
      return {g, h};
    }
    case Family::kTheorem6Pair: {
      auto [g, h] = theorem6_pair(s.k, s.n);
      return {g, h};
    }
    case Family::kEdgeMove:
      require(s.base.has_value(), "edge move needs an input graph");
      return {edge_move(*s.base, s.edge, s.y, s.z)};
  }
  throw std::invalid_argument("unknown construction family");
}

}  // namespace indopt
