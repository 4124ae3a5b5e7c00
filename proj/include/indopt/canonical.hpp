#pragma once

#include <string>
#include <vector>

#include "indopt/graph.hpp"

namespace indopt {

/// Exact canonical labelling: `order[i]` is the original vertex placed at
/// position i. Isomorphic graphs map to identical relabelled graphs.
///
/// Disconnected graphs and graphs with disconnected complements are split
/// into (co-)components which are labelled recursively and sorted; the
/// remaining prime pieces go through individualization-refinement with
/// twin-orbit pruning.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_graph(const Graph& g);

/// Byte string that is equal for two graphs iff they are isomorphic.
/// Currently the graph6 text of the canonical graph.
std::string canonical_form(const Graph& g);

}  // namespace indopt
