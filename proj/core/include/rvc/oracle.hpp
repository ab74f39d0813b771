#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rvc/coloring.hpp"
#include "rvc/graph.hpp"
#include "rvc/verification.hpp"

namespace rvc {

struct SearchBudget {
  /// Larger instances are refused unless this is raised explicitly.
  int max_vertices = 11;
  std::optional<int> max_colors;
  std::uint64_t node_budget = 500'000'000;
  /// Start the search at max(diam - 1, 1) instead of 1.
  bool diameter_lower_bound = true;
};

struct OracleResult {
  int value = 0;
  Coloring witness;
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

/// Smallest k such that some k-coloring makes g rainbow (or revised rainbow)
/// vertex-connected; 0 for complete graphs. Enumerates restricted-growth
/// colorings with incremental pruning. Throws PreconditionError on
/// disconnected input or n > max_vertices, BudgetExceeded when the node budget
/// or color cap runs out.
OracleResult exact_rvc(const Graph& g, RainbowMode mode, const SearchBudget& budget = {});

struct ColoringSearch {
  std::optional<std::vector<Color>> coloring;
  std::uint64_t nodes = 0;
};

/// Exhaustive search for a qualifying coloring using exactly k colors.
/// Since splitting a color class never breaks a qualifying path, an empty
/// result also rules out every coloring with fewer colors (when k <= n).
ColoringSearch find_coloring_with(const Graph& g, int k, RainbowMode mode, const SearchBudget& budget = {});

struct CycleTableRow {
  int n = 0;
  int constructed = 0;
  bool construction_verified = false;
  std::optional<int> exact;
  int closed_form = 0;

  bool agrees() const { return construction_verified && constructed == closed_form && (!exact || *exact == closed_form); }
};

/// Rows for 3 <= n <= max_n; the exact column is filled for n <= max_exact_n.
std::vector<CycleTableRow> reproduce_cycle_table(int max_exact_n, int max_n, const SearchBudget& budget = {},
                                                 unsigned jobs = 1);

}  // namespace rvc
