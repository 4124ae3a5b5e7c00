#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "indopt/graph.hpp"

namespace indopt {

/// graph6 text for g (no header, no newline). Only the one-byte order
/// prefix is produced since orders never exceed 62.
std::string graph6_encode(const Graph& g);

/// Parses one graph6 string; an optional ">>graph6<<" header is accepted.
/// Throws GraphError(kMalformed) on bad characters or length and
/// GraphError(kOrderOutOfRange) for orders outside [1, 62].
Graph graph6_decode(std::string_view text);

/// One graph6 string per non-blank line. Errors carry the 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Edge-list text: "n m" on the first line, then m lines "u v".
Graph parse_edge_list(std::istream& in);
std::string format_edge_list(const Graph& g);

}  // namespace indopt
