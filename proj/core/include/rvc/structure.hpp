#pragma once

#include <vector>

#include "rvc/graph.hpp"

namespace rvc {

/// Blocks are sorted by their smallest vertex; each block's vertex list is
/// sorted. A block's edges are exactly the edges of `g` induced by its vertices.
struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;  // sorted

  int cut_count() const { return static_cast<int>(cut_vertices.size()); }
};

/// Vertex-relabelled copy of part of a graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> id in the parent graph
};

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

/// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex source);

/// Throws PreconditionError on disconnected or empty input.
int diameter(const Graph& g);

/// Sorted. Throws PreconditionError on disconnected input.
std::vector<Vertex> cut_vertices(const Graph& g);

/// Throws PreconditionError unless g is connected with n >= 2.
BlockDecomposition block_decomposition(const Graph& g);

/// n >= 3, connected and without cut vertices.
bool is_2_connected(const Graph& g);

/// Connected and 2-regular.
bool is_cycle_graph(const Graph& g);

/// Vertex order around a cycle graph, starting at vertex 0 towards its smaller
/// neighbour. Throws PreconditionError if g is not a cycle.
std::vector<Vertex> cycle_order(const Graph& g);

/// Greedy deletion in (u, v) order, keeping each deletion that leaves the
/// graph 2-connected. Throws PreconditionError unless g is 2-connected.
Graph minimal_2connected_spanning(const Graph& g);

Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace rvc
