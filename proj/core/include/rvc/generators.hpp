#pragma once

#include <cstdint>
#include <random>

#include "rvc/graph.hpp"

namespace rvc {

/// mt19937_64 with a portable bounded draw, so instances are identical
/// across standard libraries for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

 private:
  std::mt19937_64 engine_;
};

enum class GeneratorKind {
  hamiltonian_chords,  // random Hamilton cycle plus chords
  ear_built,           // random cycle grown by random ears, plus chords
};

/// Deterministic for a given seed. Vertex ids are randomly permuted.
/// Throws PreconditionError for n < 3 or when extra_edges exceeds the
/// number of available non-edges.
Graph random_2connected(int n, int extra_edges, std::uint64_t seed,
                        GeneratorKind kind = GeneratorKind::hamiltonian_chords);

/// Random spanning tree plus extra_edges random non-edges.
Graph random_connected(int n, int extra_edges, std::uint64_t seed);

/// Connected graph built from `block_count` blocks, each a cycle (order 3..max_order)
/// or a complete graph (order 2..min(max_order, 5)), each new block glued to a
/// random existing vertex.
Graph random_block_graph(int block_count, int max_order, std::uint64_t seed);

}  // namespace rvc
