#include "indopt/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "indopt/graph_io.hpp"

namespace indopt {
namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;
using Rows = std::vector<std::uint64_t>;

Rows relabelled_rows(const Graph& g, const std::vector<int>& order) {
  const Graph p = permute(g, order);
  Rows rows(p.order());
  for (int v = 0; v < p.order(); ++v) rows[v] = p.neighbors(v).bits();
  return rows;
}

/// Splits cells by neighbour counts into every other cell until equitable.
/// Sub-cells are ordered by their count signature, so the result depends
/// only on the structure, never on vertex names.
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint64_t> masks(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::uint64_t m = 0;
      for (int v : cells[c]) m |= 1ULL << v;
      masks[c] = m;
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() < 2) continue;
      std::vector<std::pair<std::vector<int>, int>> keyed;
      keyed.reserve(cells[c].size());
      for (int v : cells[c]) {
        std::vector<int> sig(cells.size());
        const std::uint64_t adj = g.neighbors(v).bits();
        for (std::size_t d = 0; d < cells.size(); ++d) {
          sig[d] = std::popcount(adj & masks[d]);
        }
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      if (keyed.front().first == keyed.back().first) continue;
      Partition split;
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) split.emplace_back();
        split.back().push_back(keyed[i].second);
      }
      for (Cell& s : split) std::sort(s.begin(), s.end());
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), split.begin(), split.end());
      changed = true;
      break;
    }
  }
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

/// One vertex per class of the twin relation inside `cell`. Swapping two
/// twins is an automorphism fixing every individualized vertex, so their
/// subtrees produce the same leaves.
std::vector<int> twin_representatives(const Graph& g, const Cell& cell) {
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < cell.size(); ++i) {
    for (std::size_t j = i + 1; j < cell.size(); ++j) {
      const int u = cell[i];
      const int v = cell[j];
      const std::uint64_t nu = g.neighbors(u).bits();
      const std::uint64_t nv = g.neighbors(v).bits();
      const bool false_twins = nu == nv;
      const bool true_twins = (nu | (1ULL << u)) == (nv | (1ULL << v));
      if (false_twins || true_twins) {
        parent[find_root(parent, v)] = find_root(parent, u);
      }
    }
  }
  std::vector<int> reps;
  for (int v : cell) {
    if (find_root(parent, v) == v) reps.push_back(v);
  }
  return reps;
}

struct LeafSearch {
  const Graph& g;
  std::optional<Rows> best_rows;
  std::vector<int> best_order;

  void run(Partition cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<int> order;
      order.reserve(cells.size());
      for (const Cell& c : cells) order.push_back(c.front());
      Rows rows = relabelled_rows(g, order);
      if (!best_rows || rows > *best_rows) {
        best_rows = std::move(rows);
        best_order = std::move(order);
      }
      return;
    }
    const auto index = target - cells.begin();
    for (int v : twin_representatives(g, *target)) {
      Partition next = cells;
      Cell rest;
      for (int u : cells[index]) {
        if (u != v) rest.push_back(u);
      }
      next[index] = Cell{v};
      next.insert(next.begin() + index + 1, std::move(rest));
      run(std::move(next));
    }
  }
};

std::vector<int> label_prime(const Graph& g, VertexSet s) {
  const std::vector<int> local_to_global = s.to_vector();
  const Graph local = induced_subgraph(g, s);
  Cell all(local.order());
  std::iota(all.begin(), all.end(), 0);
  LeafSearch search{local, std::nullopt, {}};
  search.run(Partition{all});
  std::vector<int> out;
  out.reserve(search.best_order.size());
  for (int v : search.best_order) out.push_back(local_to_global[v]);
  return out;
}

std::vector<int> label(const Graph& g, const Graph& gc, VertexSet s);

std::vector<int> label_pieces(const Graph& g, const Graph& gc,
                              const std::vector<VertexSet>& pieces) {
  struct Piece {
    std::vector<int> order;
    Rows key;
  };
  std::vector<Piece> labelled;
  labelled.reserve(pieces.size());
  for (VertexSet p : pieces) {
    std::vector<int> order = label(g, gc, p);
    Rows key = relabelled_rows(g, order);
    labelled.push_back({std::move(order), std::move(key)});
  }
  std::stable_sort(labelled.begin(), labelled.end(), [](const Piece& a, const Piece& b) {
    if (a.key.size() != b.key.size()) return a.key.size() < b.key.size();
    return a.key < b.key;
  });
  std::vector<int> out;
  for (const Piece& p : labelled) out.insert(out.end(), p.order.begin(), p.order.end());
  return out;
}

std::vector<int> label(const Graph& g, const Graph& gc, VertexSet s) {
  if (s.size() == 1) return {s.first()};
  if (auto parts = components(g, s); parts.size() > 1) return label_pieces(g, gc, parts);
  if (auto parts = components(gc, s); parts.size() > 1) return label_pieces(g, gc, parts);
  return label_prime(g, s);
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.is_null()) return {};
  return label(g, complement(g), g.vertices());
}

Graph canonical_graph(const Graph& g) { return permute(g, canonical_labeling(g)); }

std::string canonical_form(const Graph& g) { return graph6_encode(canonical_graph(g)); }

}  // namespace indopt
