#include "rvc/decomposition.hpp"

#include <algorithm>
#include <queue>

#include "rvc/error.hpp"
#include "rvc/structure.hpp"

namespace rvc {
namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Any cycle of a connected graph with a cycle, via the first DFS back edge.
std::vector<Vertex> some_cycle(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> parent(idx(n), -1);
  std::vector<int> depth(idx(n), -1);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, 0}};
  depth[0] = 0;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nbrs = g.neighbors(f.v);
    if (f.next == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex w = nbrs[f.next++];
    if (depth[idx(w)] < 0) {
      parent[idx(w)] = f.v;
      depth[idx(w)] = depth[idx(f.v)] + 1;
      stack.push_back({w, 0});
    } else if (w != parent[idx(f.v)] && depth[idx(w)] < depth[idx(f.v)]) {
      std::vector<Vertex> cycle;
      for (Vertex x = f.v; x != w; x = parent[idx(x)]) cycle.push_back(x);
      cycle.push_back(w);
      std::reverse(cycle.begin(), cycle.end());
      return cycle;
    }
  }
  throw PreconditionError("graph is acyclic");
}

// Some ear of the cycle in g: a chord, or a path through vertices off the
// cycle. Exists whenever g is 2-connected and strictly larger than the cycle.
Path ear_of_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const int n = g.vertex_count();
  const Graph c = cycle_graph_on(n, cycle);
  std::vector<char> on_cycle(idx(n), 0);
  for (Vertex v : cycle) on_cycle[idx(v)] = 1;
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());

  for (Vertex a : sorted) {
    for (Vertex w : g.neighbors(a)) {
      if (on_cycle[idx(w)]) {
        if (!c.has_edge(a, w)) return {a, w};
        continue;
      }
      std::vector<Vertex> parent(idx(n), -2);
      std::queue<Vertex> queue;
      parent[idx(w)] = -1;
      queue.push(w);
      while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop();
        for (Vertex y : g.neighbors(x)) {
          if (on_cycle[idx(y)]) {
            if (y == a) continue;
            Path path{y};
            for (Vertex z = x; z != -1; z = parent[idx(z)]) path.push_back(z);
            path.push_back(a);
            std::reverse(path.begin(), path.end());
            return path;
          }
          if (parent[idx(y)] == -2) {
            parent[idx(y)] = x;
            queue.push(y);
          }
        }
      }
    }
  }
  throw PreconditionError("cycle has no ear; graph is not 2-connected");
}

// Of the two cycles formed by an ear and the arcs of `cycle` between its
// ends, the one of even length. Arc lengths sum to an odd number, so exactly
// one choice is even when the cycle is odd.
std::vector<Vertex> even_cycle_through_ear(const std::vector<Vertex>& cycle, const Path& ear) {
  const auto len = cycle.size();
  const auto pos_a = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), ear.front()) - cycle.begin());
  const auto pos_b = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), ear.back()) - cycle.begin());
  const std::size_t forward = (pos_b + len - pos_a) % len;  // arc a -> b going forward
  const std::size_t ear_len = ear.size() - 1;

  std::vector<Vertex> out;
  if ((forward + ear_len) % 2 == 0) {
    for (std::size_t i = 0; i <= forward; ++i) out.push_back(cycle[(pos_a + i) % len]);
  } else {
    for (std::size_t i = 0; i <= len - forward; ++i) out.push_back(cycle[(pos_b + i) % len]);
  }
  // `out` runs from one ear end to the other; close it through the ear interior.
  const bool starts_at_a = out.front() == ear.front();
  for (std::size_t i = ear.size() - 2; i >= 1; --i) out.push_back(starts_at_a ? ear[i] : ear[ear.size() - 1 - i]);
  return out;
}

struct EarFinder {
  const Graph& g;
  const Graph& h;
  const EarSearchOptions& options;
  std::vector<char> in_h;
  std::vector<char> on_path;
  std::vector<int> component_size;  // size of the component of g - V(h) containing v
  Path path;
  Path best;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  bool done = false;

  EarFinder(const Graph& graph, const Graph& sub, const EarSearchOptions& opts)
      : g(graph), h(sub), options(opts), in_h(idx(graph.vertex_count()), 0), on_path(in_h.size(), 0),
        component_size(in_h.size(), 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) in_h[idx(v)] = h.degree(v) > 0;
    std::vector<int> comp(in_h.size(), -1);
    std::vector<int> sizes;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      if (in_h[idx(s)] || comp[idx(s)] >= 0) continue;
      const int id = static_cast<int>(sizes.size());
      sizes.push_back(0);
      std::vector<Vertex> stack{s};
      comp[idx(s)] = id;
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        ++sizes.back();
        for (Vertex y : g.neighbors(x))
          if (!in_h[idx(y)] && comp[idx(y)] < 0) {
            comp[idx(y)] = id;
            stack.push_back(y);
          }
      }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (comp[idx(v)] >= 0) component_size[idx(v)] = sizes[idx(comp[idx(v)])];
  }

  int best_length() const { return best.empty() ? 0 : static_cast<int>(best.size()) - 1; }

  void offer(Vertex end) {
    const int len = static_cast<int>(path.size());  // path plus `end`, minus one
    if (len > best_length()) {
      best = path;
      best.push_back(end);
      if (options.length_cap && len >= *options.length_cap) done = true;
    }
  }

  void extend(Vertex a, Vertex x) {
    if (done) return;
    if (++nodes > options.node_budget) {
      exhausted = done = true;
      return;
    }
    for (Vertex y : g.neighbors(x)) {
      if (in_h[idx(y)]) {
        if (y != a) offer(y);
      } else if (!on_path[idx(y)]) {
        on_path[idx(y)] = 1;
        path.push_back(y);
        extend(a, y);
        path.pop_back();
        on_path[idx(y)] = 0;
      }
      if (done) return;
    }
  }

  void run() {
    for (Vertex a = 0; a < g.vertex_count() && !done; ++a) {
      if (!in_h[idx(a)]) continue;
      for (Vertex w : g.neighbors(a)) {
        if (done) break;
        path.assign(1, a);
        if (in_h[idx(w)]) {
          if (!h.has_edge(a, w)) offer(w);
          continue;
        }
        if (component_size[idx(w)] + 1 <= best_length()) continue;
        on_path[idx(w)] = 1;
        path.push_back(w);
        extend(a, w);
        on_path[idx(w)] = 0;
      }
    }
  }
};

}  // namespace

std::vector<Vertex> find_initial_cycle(const Graph& g) {
  if (!is_2_connected(g)) throw PreconditionError("find_initial_cycle: graph is not 2-connected");
  std::vector<Vertex> cycle = some_cycle(g);
  if (cycle.size() % 2 == 0) return cycle;
  if (is_cycle_graph(g)) return cycle;
  return even_cycle_through_ear(cycle, ear_of_cycle(g, cycle));
}

LongestEar longest_ear(const Graph& g, const Graph& h, const EarSearchOptions& options) {
  if (h.vertex_count() != g.vertex_count())
    throw PreconditionError("longest_ear: subgraph must share the host's vertex ids");
  EarFinder finder(g, h, options);
  finder.run();
  if (finder.best.empty()) throw PreconditionError("longest_ear: subgraph has no ear");
  return {Ear{finder.best}, !finder.exhausted};
}

EarDecomposition ear_decomposition(const Graph& g, std::uint64_t node_budget) {
  if (!is_2_connected(g)) throw PreconditionError("ear_decomposition: graph is not 2-connected");
  const int n = g.vertex_count();
  const Graph minimal = minimal_2connected_spanning(g);

  EarDecomposition d;
  Graph host = minimal;
  if (is_cycle_graph(minimal) && minimal.vertex_count() % 2 == 1 && minimal.edge_count() != g.edge_count()) {
    // The minimal subgraph is an odd cycle but g is not: start from the even
    // cycle closed by one extra edge of g and keep that edge in the host.
    auto cycle = cycle_order(minimal);
    Path chord = ear_of_cycle(g, cycle);
    d.initial_cycle = even_cycle_through_ear(cycle, chord);
    host = minimal.with_edges(std::vector<Edge>{Edge(chord[0], chord[1])});
  } else {
    d.initial_cycle = find_initial_cycle(minimal);
  }

  Graph current = cycle_graph_on(n, d.initial_cycle);
  std::optional<int> cap;
  while (current.edge_count() < host.edge_count()) {
    EarSearchOptions options{node_budget, cap};
    LongestEar found = longest_ear(host, current, options);
    if (!found.exhaustive) d.heuristic = true;
    std::vector<Edge> added;
    for (std::size_t i = 0; i + 1 < found.ear.path.size(); ++i)
      added.emplace_back(found.ear.path[i], found.ear.path[i + 1]);
    current = current.with_edges(added);
    cap = found.ear.length();
    d.ears.push_back(std::move(found.ear));
  }
  d.long_count = static_cast<int>(d.ears.size());
  for (const Edge& e : g.edges())
    if (!current.has_edge(e)) d.ears.push_back(Ear{{e.u, e.v}});
  return d;
}

Graph replay_decomposition(int vertex_count, const EarDecomposition& d, std::optional<std::size_t> ear_count) {
  const std::size_t count = std::min(ear_count.value_or(d.ears.size()), d.ears.size());
  std::vector<Edge> edges;
  const auto& cycle = d.initial_cycle;
  for (std::size_t i = 0; i < cycle.size(); ++i) edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  for (std::size_t k = 0; k < count; ++k) {
    const Path& p = d.ears[k].path;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.emplace_back(p[i], p[i + 1]);
  }
  return Graph(vertex_count, edges);
}

}  // namespace rvc
