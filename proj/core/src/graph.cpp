#include "rvc/graph.hpp"

#include <algorithm>
#include <string>

#include "rvc/error.hpp"

namespace rvc {

Graph::Graph(int vertex_count) : adjacency_(static_cast<std::size_t>(vertex_count < 0 ? 0 : vertex_count)) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= vertex_count)
      throw PreconditionError("edge {" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              "} out of range for " + std::to_string(vertex_count) + " vertices");
    if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  edge_count_ = 0;
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  auto all = edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(vertex_count(), all);
}

Graph Graph::without_edge(Edge e) const {
  auto all = edges();
  std::erase(all, e);
  return Graph(vertex_count(), all);
}

Graph make_cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph make_path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph cycle_graph_on(int vertex_count, std::span<const Vertex> cycle) {
  std::vector<Edge> edges;
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i) edges.emplace_back(cycle[i], cycle[(i + 1) % len]);
  return Graph(vertex_count, edges);
}

bool is_simple_path(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Vertex v = path[i];
    if (v < 0 || v >= g.vertex_count() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
  }
  return true;
}

}  // namespace rvc
