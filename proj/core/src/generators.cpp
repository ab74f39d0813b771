#include "rvc/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "rvc/error.hpp"

namespace rvc {
namespace {

std::vector<Vertex> random_permutation(int n, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

void add_random_chords(int n, int extra, std::set<Edge>& edges, Rng& rng) {
  std::vector<Edge> free;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!edges.contains(Edge(u, v))) free.emplace_back(u, v);
  if (extra < 0 || static_cast<std::size_t>(extra) > free.size())
    throw PreconditionError("requested " + std::to_string(extra) + " extra edges but only " +
                            std::to_string(free.size()) + " non-edges exist");
  for (int i = 0; i < extra; ++i) {
    const std::size_t j = static_cast<std::size_t>(i) + rng.below(free.size() - static_cast<std::size_t>(i));
    std::swap(free[static_cast<std::size_t>(i)], free[j]);
    edges.insert(free[static_cast<std::size_t>(i)]);
  }
}

Graph relabel(int n, const std::set<Edge>& edges, Rng& rng) {
  const auto perm = random_permutation(n, rng);
  std::vector<Edge> out;
  for (const Edge& e : edges) out.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return Graph(n, out);
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

Graph random_2connected(int n, int extra_edges, std::uint64_t seed, GeneratorKind kind) {
  if (n < 3) throw PreconditionError("random_2connected: need n >= 3");
  Rng rng(seed);
  std::set<Edge> edges;
  if (kind == GeneratorKind::hamiltonian_chords) {
    for (int i = 0; i < n; ++i) edges.emplace(i, (i + 1) % n);
  } else {
    const int base = rng.between(3, n);
    for (int i = 0; i < base; ++i) edges.emplace(i, (i + 1) % base);
    int placed = base;
    while (placed < n) {
      const int interior = rng.between(1, std::min(n - placed, 11));
      const int a = rng.between(0, placed - 1);
      int b = rng.between(0, placed - 2);
      if (b >= a) ++b;
      Vertex prev = a;
      for (int i = 0; i < interior; ++i) {
        edges.emplace(prev, placed);
        prev = placed++;
      }
      edges.emplace(prev, b);
    }
  }
  add_random_chords(n, extra_edges, edges, rng);
  return relabel(n, edges, rng);
}

Graph random_connected(int n, int extra_edges, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("random_connected: need n >= 1");
  Rng rng(seed);
  std::set<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace(v, static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v))));
  add_random_chords(n, extra_edges, edges, rng);
  return relabel(n, edges, rng);
}

Graph random_block_graph(int block_count, int max_order, std::uint64_t seed) {
  if (block_count < 1 || max_order < 3) throw PreconditionError("random_block_graph: need >= 1 block of order >= 3");
  Rng rng(seed);
  std::set<Edge> edges;
  int placed = 1;
  for (int b = 0; b < block_count; ++b) {
    const bool complete = rng.below(2) == 0;
    const int order = complete ? rng.between(2, std::min(max_order, 5)) : rng.between(3, max_order);
    std::vector<Vertex> members{static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(placed)))};
    for (int i = 1; i < order; ++i) members.push_back(placed++);
    if (complete) {
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace(members[i], members[j]);
    } else {
      for (std::size_t i = 0; i < members.size(); ++i) edges.emplace(members[i], members[(i + 1) % members.size()]);
    }
  }
  return relabel(placed, edges, rng);
}

}  // namespace rvc
