#include "rvc/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "rvc/error.hpp"

namespace rvc {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

long long parse_integer(std::string_view token, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
  ParsedGraph result;
  std::set<Edge> edges;
  long long declared = -1;
  long long max_id = -1;
  int line_no = 0;

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "vertices") {
      if (tokens.size() != 2) throw ParseError(line_no, "directive must be 'vertices <n>'");
      if (declared >= 0) throw ParseError(line_no, "vertex count declared twice");
      if (!edges.empty()) throw ParseError(line_no, "'vertices' directive must precede all edges");
      declared = parse_integer(tokens[1], line_no);
      if (declared < 0) throw ParseError(line_no, "negative vertex count");
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected two vertex ids per line");
    const long long u = parse_integer(tokens[0], line_no);
    const long long v = parse_integer(tokens[1], line_no);
    if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex id");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (declared >= 0 && (u >= declared || v >= declared))
      throw ParseError(line_no, "vertex id exceeds declared count " + std::to_string(declared));
    if (u > 100'000'000 || v > 100'000'000) throw ParseError(line_no, "vertex id too large");
    Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!edges.insert(e).second)
      result.warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge {" + std::to_string(e.u) +
                                ", " + std::to_string(e.v) + "} ignored");
    max_id = std::max({max_id, u, v});
  }

  const long long n = declared >= 0 ? declared : max_id + 1;
  std::vector<Edge> list(edges.begin(), edges.end());
  result.graph = Graph(static_cast<int>(n), list);
  return result;
}

ParsedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

ParsedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace rvc
