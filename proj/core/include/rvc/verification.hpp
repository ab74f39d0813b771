#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rvc/coloring.hpp"
#include "rvc/graph.hpp"

namespace rvc {

enum class PathKind { rainbow, revised_rainbow };

/// Which per-path predicate is being certified.
///
/// rainbow: internal vertices carry pairwise distinct colors.
/// revised_rainbow: all vertices distinct, except that the two ends may share.
/// A forbidden color, when set, may not appear anywhere on the path.
struct RainbowMode {
  PathKind kind = PathKind::rainbow;
  std::optional<Color> forbidden_color;

  static RainbowMode rainbow() { return {}; }
  static RainbowMode revised() { return {PathKind::revised_rainbow, std::nullopt}; }
};

inline constexpr std::uint64_t kDefaultNodeBudget = 20'000'000;

struct VerifyOptions {
  bool store_witnesses = false;
  unsigned jobs = 1;
  /// Per search (one source vertex); exhaustion throws BudgetExceeded.
  std::uint64_t node_budget = kDefaultNodeBudget;
};

using VertexPair = std::pair<Vertex, Vertex>;

struct Certificate {
  enum class Status { verified, counterexample };

  Status status = Status::verified;
  RainbowMode mode;
  /// Keyed by (u, v) with u < v; filled only when witnesses were requested.
  std::map<VertexPair, Path> witnesses;
  /// Lexicographically first pair without a qualifying path.
  std::optional<VertexPair> failing_pair;

  bool verified() const { return status == Status::verified; }
};

bool is_rainbow_path(std::span<const Vertex> path, std::span<const Color> colors, RainbowMode mode);

/// Exhaustive depth-first search (neighbours in ascending order). An empty
/// result is a proof that no qualifying path exists; budget exhaustion throws
/// BudgetExceeded instead.
std::optional<Path> exists_rainbow_path(const Graph& g, std::span<const Color> colors, Vertex u, Vertex v,
                                        RainbowMode mode, std::uint64_t node_budget = kDefaultNodeBudget);

/// All-pairs check. Throws PreconditionError on a disconnected graph or a
/// coloring of the wrong size.
Certificate verify_rainbow_vc(const Graph& g, std::span<const Color> colors, RainbowMode mode,
                              const VerifyOptions& options = {});

inline Certificate verify_rainbow_vc(const Graph& g, const Coloring& c, RainbowMode mode,
                                     const VerifyOptions& options = {}) {
  return verify_rainbow_vc(g, std::span<const Color>(c.colors), mode, options);
}

/// Property (*): every vertex u with c(u) != x is reachable from v by a
/// revised rainbow path on which x does not occur. u = v counts (trivially).
/// Throws PreconditionError when c(v) == x.
bool has_property_star(const Graph& g, std::span<const Color> colors, Vertex v, Color x,
                       std::uint64_t node_budget = kDefaultNodeBudget);

struct ColorStats {
  int distinct = 0;
  int max_multiplicity = 0;
  std::map<Color, int> multiplicity;       // color -> uses
  std::map<int, int> histogram;            // uses -> number of colors
  std::vector<Color> once_used;            // sorted
};

ColorStats color_stats(std::span<const Color> colors);

}  // namespace rvc
