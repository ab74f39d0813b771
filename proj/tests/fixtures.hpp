#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "rvc/generators.hpp"
#include "rvc/graph.hpp"
#include "rvc/structure.hpp"

namespace rvc::fixtures {

inline Graph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.emplace_back(u, v);
  return Graph(n, list);
}

// Two triangles sharing vertex 2.
inline Graph bowtie() { return graph_of(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}); }

// C6 on 0..5 plus the path 0-6-3.
inline Graph theta() { return graph_of(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 3}}); }

// C_h on 0..h-1 plus a path of `length` edges from a to b through new vertices.
inline Graph cycle_with_ear(int h, int a, int b, int length) {
  std::vector<Edge> edges;
  for (int i = 0; i < h; ++i) edges.emplace_back(i, (i + 1) % h);
  int prev = a;
  for (int i = 0; i + 1 < length; ++i) {
    edges.emplace_back(prev, h + i);
    prev = h + i;
  }
  edges.emplace_back(prev, b);
  return Graph(h + length - 1, edges);
}

// Two cycles of order k sharing vertex 0.
inline Graph two_cycles(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  std::vector<int> second{0};
  for (int i = 0; i < k - 1; ++i) second.push_back(k + i);
  for (int i = 0; i < k; ++i) edges.emplace_back(second[static_cast<std::size_t>(i)], second[static_cast<std::size_t>((i + 1) % k)]);
  return Graph(2 * k - 1, edges);
}

// Non-edges left for chords by either generator kind. An ear-built graph has
// at most n + (n - 3) edges before chords are added.
inline int chord_capacity(int n) { return std::max(0, n * (n - 1) / 2 - (2 * n - 3)); }

inline Graph connected_graph(int n, int extra, std::uint64_t seed) {
  return random_connected(n, std::min(extra, (n - 1) * (n - 2) / 2), seed);
}

inline Graph two_connected_graph(int n, int extra, std::uint64_t seed,
                                 GeneratorKind kind = GeneratorKind::hamiltonian_chords) {
  return random_2connected(n, std::min(extra, chord_capacity(n)), seed, kind);
}

// The subgraph on the vertices that have at least one edge.
inline Graph non_isolated_part(const Graph& g) {
  std::vector<Vertex> present;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) present.push_back(v);
  return induced_subgraph(g, present).graph;
}

}  // namespace rvc::fixtures
