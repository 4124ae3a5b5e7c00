#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indopt {

inline constexpr int kMaxOrder = 62;

enum class GraphErrc {
  kOrderOutOfRange,
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kMissingEdge,
  kAsymmetric,
  kMalformed,
};

class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

/// Subset of {0, ..., 61} packed into one word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet range(int n) {
    return VertexSet(n <= 0 ? 0 : (n >= 64 ? ~0ULL : ((1ULL << n) - 1)));
  }
  static constexpr VertexSet single(int v) { return VertexSet(1ULL << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1ULL; }
  constexpr bool contains(VertexSet other) const {
    return (other.bits_ & ~bits_) == 0;
  }
  /// Lowest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (1ULL << v)); }
  constexpr VertexSet without(int v) const {
    return VertexSet(bits_ & ~(1ULL << v));
  }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;

 private:
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph of order at most 62, stored as adjacency bitsets.
///
/// Values are immutable: every structural operation returns a new graph.
/// Order 0 is reserved for the null graph, the result of deleting every
/// vertex; its independence polynomial is the constant 1.
class Graph {
 public:
  /// The order-0 null graph.
  Graph() = default;

  /// Builds from adjacency rows; validates symmetry and irreflexivity.
  static Graph from_rows(int n, const std::vector<std::uint64_t>& rows);
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  bool is_null() const { return n_ == 0; }
  int size() const;
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(rows_[check(v)]); }
  int degree(int v) const { return neighbors(v).size(); }
  bool has_edge(int u, int v) const { return (rows_[check(u)] >> check(v)) & 1ULL; }
  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const;

 private:
  int check(int v) const {
    if (v < 0 || v >= n_) {
      throw GraphError(GraphErrc::kVertexOutOfRange,
                       "vertex " + std::to_string(v) + " out of range for order " +
                           std::to_string(n_));
    }
    return v;
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};

  friend Graph make_graph_unchecked(int n, const std::uint64_t* rows);
};

// Internal fast path for callers that already guarantee the invariants.
Graph make_graph_unchecked(int n, const std::uint64_t* rows);

Graph empty_graph(int n);
Graph complete_graph(int n);

Graph add_edge(const Graph& g, int u, int v);
Graph delete_edge(const Graph& g, int u, int v);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// Subgraph induced by `s`, relabelled in increasing vertex order.
/// The empty set yields the null graph.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, int v);
VertexSet closed_neighborhood(const Graph& g, int v);

/// Applies a relabelling: vertex `order[i]` of `g` becomes vertex i.
Graph permute(const Graph& g, const std::vector<int>& order);

/// Connected components, each as a vertex set, ordered by lowest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) {
  return components(g, g.vertices());
}

bool is_clique(const Graph& g, VertexSet s);
bool contains_k_clique(const Graph& g, VertexSet s, int k);

/// All k-cliques of g as vertex sets.
std::vector<VertexSet> k_cliques(const Graph& g, int k);

/// Number of complete subgraphs K_t for t = 0..n (index 0 counts the empty clique).
using CliqueCounts = std::vector<std::uint64_t>;
CliqueCounts clique_counts(const Graph& g);

}  // namespace indopt
