#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace rvc {

using Vertex = int;
using Color = int;

/// Marker for "vertex not part of the (sub)graph being colored".
inline constexpr Color kNoColor = -1;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A simple path: consecutive vertices adjacent, all vertices distinct.
using Path = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable once built; the mutating helpers return new graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  /// Throws PreconditionError on self-loops or out-of-range endpoints.
  /// Repeated edges are collapsed.
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  /// Edges sorted by (u, v).
  std::vector<Edge> edges() const;

  Graph with_edges(std::span<const Edge> extra) const;
  Graph without_edge(Edge e) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete(int n);

/// Graph on `vertex_count` vertices whose edges are the consecutive pairs of `cycle`
/// (closed). Vertices not on the cycle stay isolated.
Graph cycle_graph_on(int vertex_count, std::span<const Vertex> cycle);

/// True if `path` is non-empty, has distinct in-range vertices and consecutive
/// vertices are adjacent in `g`.
bool is_simple_path(const Graph& g, std::span<const Vertex> path);

}  // namespace rvc
