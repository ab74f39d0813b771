#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "rvc/graph.hpp"

namespace rvc {

struct ParsedGraph {
  Graph graph;
  /// Non-fatal issues, e.g. collapsed duplicate edges.
  std::vector<std::string> warnings;
};

/// Reads the edge-list format: one `u v` pair per line, `#` comments, blank
/// lines ignored, and an optional `vertices <n>` directive before any edge.
/// Throws ParseError on malformed lines, negative ids, self-loops or ids
/// beyond a declared vertex count.
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph(std::string_view text);
ParsedGraph read_graph_file(const std::string& path);

/// `vertices <n>` followed by edges sorted by (min endpoint, max endpoint).
std::string serialize_graph(const Graph& g);

}  // namespace rvc
