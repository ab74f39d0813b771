#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rvc/graph.hpp"

namespace rvc {

/// A path whose two distinct ends lie in the current subgraph and whose
/// interior vertices are new.
struct Ear {
  Path path;

  Vertex a() const { return path.front(); }
  Vertex b() const { return path.back(); }
  int length() const { return static_cast<int>(path.size()) - 1; }
  std::span<const Vertex> interior() const {
    return std::span<const Vertex>(path).subspan(1, path.size() - 2);
  }
};

/// Nonincreasing ear decomposition (G0, G1, ..., Gk).
///
/// `initial_cycle` lists the vertices of G0 in cyclic order. Ears are in
/// insertion order with nonincreasing lengths; ears[0, long_count) have
/// length >= 2 and the rest are single edges.
struct EarDecomposition {
  std::vector<Vertex> initial_cycle;
  std::vector<Ear> ears;
  int long_count = 0;
  /// Set when some longest-ear search ran out of budget, in which case the
  /// ear chosen at that step is only the longest one found.
  bool heuristic = false;
};

struct EarSearchOptions {
  std::uint64_t node_budget = 5'000'000;
  /// Stop as soon as an ear of this length is found (it cannot be beaten).
  std::optional<int> length_cap;
};

struct LongestEar {
  Ear ear;
  bool exhaustive = true;
};

/// An even cycle of g, or g's own vertex sequence when g is an odd cycle.
/// Throws PreconditionError unless g is 2-connected.
std::vector<Vertex> find_initial_cycle(const Graph& g);

/// Longest ear of the subgraph `h` in `g`; ties go to the lexicographically
/// smallest vertex sequence. `h` lives on g's vertex ids, and its vertex set
/// is the set of non-isolated vertices. Throws PreconditionError when no ear
/// exists.
LongestEar longest_ear(const Graph& g, const Graph& h, const EarSearchOptions& options = {});

/// Throws PreconditionError unless g is 2-connected.
EarDecomposition ear_decomposition(const Graph& g, std::uint64_t node_budget = 5'000'000);

/// G0 followed by the first `ear_count` ears (all ears when omitted), on g's vertex ids.
Graph replay_decomposition(int vertex_count, const EarDecomposition& d,
                           std::optional<std::size_t> ear_count = std::nullopt);

}  // namespace rvc
