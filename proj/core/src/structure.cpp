#include "rvc/structure.hpp"

#include <algorithm>
#include <queue>

#include "rvc/error.hpp"

namespace rvc {
namespace {

struct Biconnected {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cuts;
};

// Iterative low-point DFS from vertex 0 with an edge stack. Assumes g connected.
Biconnected biconnected_components(const Graph& g) {
  const int n = g.vertex_count();
  Biconnected out;
  if (n == 0) return out;

  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  int root_children = 0;
  const Vertex root = 0;

  disc[0] = low[0] = timer++;
  stack.push_back({root, -1, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nbrs = g.neighbors(f.v);
    if (f.next < nbrs.size()) {
      const Vertex w = nbrs[f.next++];
      const auto vi = static_cast<std::size_t>(f.v), wi = static_cast<std::size_t>(w);
      if (disc[wi] < 0) {
        edge_stack.emplace_back(f.v, w);
        disc[wi] = low[wi] = timer++;
        if (f.v == root) ++root_children;
        stack.push_back({w, f.v, 0});
      } else if (w != f.parent && disc[wi] < disc[vi]) {
        edge_stack.emplace_back(f.v, w);
        low[vi] = std::min(low[vi], disc[wi]);
      }
      continue;
    }
    const Vertex child = f.v;
    const Vertex parent = f.parent;
    stack.pop_back();
    if (parent < 0) continue;
    const auto ci = static_cast<std::size_t>(child), pi = static_cast<std::size_t>(parent);
    low[pi] = std::min(low[pi], low[ci]);
    if (low[ci] >= disc[pi]) {
      if (parent != root) is_cut[pi] = 1;
      std::vector<Vertex> block;
      const Edge tree_edge(parent, child);
      while (!edge_stack.empty()) {
        const Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e.u);
        block.push_back(e.v);
        if (e == tree_edge) break;
      }
      std::sort(block.begin(), block.end());
      block.erase(std::unique(block.begin(), block.end()), block.end());
      out.blocks.push_back(std::move(block));
    }
  }
  if (root_children >= 2) is_cut[0] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[static_cast<std::size_t>(v)]) out.cuts.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) throw PreconditionError(std::string(op) + ": graph is not connected");
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  auto dist = distances_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  return g.edge_count() == n * (n > 0 ? n - 1 : 0) / 2;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<Vertex> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
      queue.push(w);
    }
  }
  return dist;
}

int diameter(const Graph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("diameter: empty graph");
  require_connected(g, "diameter");
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto dist = distances_from(g, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  require_connected(g, "cut_vertices");
  return biconnected_components(g).cuts;
}

BlockDecomposition block_decomposition(const Graph& g) {
  if (g.vertex_count() < 2) throw PreconditionError("block_decomposition: need at least 2 vertices");
  require_connected(g, "block_decomposition");
  auto bc = biconnected_components(g);
  return {std::move(bc.blocks), std::move(bc.cuts)};
}

bool is_2_connected(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  return biconnected_components(g).cuts.empty();
}

bool is_cycle_graph(const Graph& g) {
  if (g.vertex_count() < 3 || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

std::vector<Vertex> cycle_order(const Graph& g) {
  if (!is_cycle_graph(g)) throw PreconditionError("cycle_order: graph is not a cycle");
  std::vector<Vertex> order{0};
  Vertex prev = 0, cur = g.neighbors(0)[0];
  while (cur != 0) {
    order.push_back(cur);
    auto nbrs = g.neighbors(cur);
    const Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  return order;
}

Graph minimal_2connected_spanning(const Graph& g) {
  if (!is_2_connected(g)) throw PreconditionError("minimal_2connected_spanning: graph is not 2-connected");
  Graph current = g;
  for (const Edge& e : g.edges()) {
    // A vertex of degree 2 keeps both edges in any 2-connected spanning subgraph.
    if (current.degree(e.u) <= 2 || current.degree(e.v) <= 2) continue;
    Graph candidate = current.without_edge(e);
    if (is_2_connected(candidate)) current = std::move(candidate);
  }
  return current;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (Vertex u : vertices)
    for (Vertex w : g.neighbors(u)) {
      const int lu = local[static_cast<std::size_t>(u)], lw = local[static_cast<std::size_t>(w)];
      if (lw >= 0 && lu < lw) edges.emplace_back(lu, lw);
    }
  return {Graph(static_cast<int>(vertices.size()), edges), vertices};
}

}  // namespace rvc
