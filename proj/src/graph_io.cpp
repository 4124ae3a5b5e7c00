#include "indopt/graph_io.hpp"

#include <optional>
#include <sstream>

namespace indopt {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kOffset = 63;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

GraphError at_line(int line, const GraphError& e) {
  return GraphError(e.code(), "line " + std::to_string(line) + ": " + e.what());
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + kOffset));
  int bits = 0;
  int acc = 0;
  // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kOffset));
  return out;
}

Graph graph6_decode(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw GraphError(GraphErrc::kMalformed, "empty graph6 string");
  for (char c : text) {
    if (c < kOffset || c > 126) {
      throw GraphError(GraphErrc::kMalformed,
                       std::string("invalid graph6 character '") + c + "'");
    }
  }
  if (text[0] == 126) {
    throw GraphError(GraphErrc::kOrderOutOfRange, "graph6 orders above 62 are not supported");
  }
  const int n = text[0] - kOffset;
  if (n < 1 || n > kMaxOrder) {
    throw GraphError(GraphErrc::kOrderOutOfRange,
                     "graph6 order " + std::to_string(n) + " outside [1, 62]");
  }
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (pairs + 5) / 6;
  const std::string_view data = text.substr(1);
  if (data.size() != expected) {
    throw GraphError(GraphErrc::kMalformed,
                     "graph6 order " + std::to_string(n) + " needs " + std::to_string(expected) +
                         " data bytes, got " + std::to_string(data.size()));
  }
  std::vector<std::uint64_t> rows(n, 0);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = data[bit / 6] - kOffset;
      if ((byte >> (5 - bit % 6)) & 1) {
        rows[i] |= 1ULL << j;
        rows[j] |= 1ULL << i;
      }
    }
  }
  if (pairs % 6 != 0 && ((data.back() - kOffset) & ((1 << (6 - pairs % 6)) - 1)) != 0) {
    throw GraphError(GraphErrc::kMalformed, "graph6 padding bits must be zero");
  }
  return Graph::from_rows(n, rows);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const GraphError& e) {
      throw at_line(number, e);
    }
  }
  return out;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int number = 0;
  auto next_line = [&]() -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++number;
      if (!trim(line).empty()) return std::string(trim(line));
    }
    return std::nullopt;
  };
  auto header = next_line();
  if (!header) throw GraphError(GraphErrc::kMalformed, "line 1: missing \"n m\" header");
  std::istringstream hs(*header);
  int n = 0;
  int m = 0;
  std::string extra;
  if (!(hs >> n >> m) || (hs >> extra)) {
    throw GraphError(GraphErrc::kMalformed,
                     "line " + std::to_string(number) + ": expected \"n m\"");
  }
  Graph g;
  try {
    g = empty_graph(n);
  } catch (const GraphError& e) {
    throw at_line(number, e);
  }
  for (int e = 0; e < m; ++e) {
    auto text = next_line();
    if (!text) {
      throw GraphError(GraphErrc::kMalformed, "line " + std::to_string(number + 1) +
                                                  ": expected " + std::to_string(m) +
                                                  " edges, found " + std::to_string(e));
    }
    std::istringstream es(*text);
    int u = 0;
    int v = 0;
    if (!(es >> u >> v) || (es >> extra)) {
      throw GraphError(GraphErrc::kMalformed,
                       "line " + std::to_string(number) + ": expected \"u v\"");
    }
    try {
      g = add_edge(g, u, v);
    } catch (const GraphError& err) {
      throw at_line(number, err);
    }
  }
  if (next_line()) {
    throw GraphError(GraphErrc::kMalformed,
                     "line " + std::to_string(number) + ": more edges than declared");
  }
  return g;
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace indopt
