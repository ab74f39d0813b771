#include <array>

#include "rvc/construction.hpp"
#include "rvc/error.hpp"

namespace rvc {
namespace {

// Witnesses for the small cycles, found with find_coloring_with at
// k = cycle_rvc_closed_form(n) and frozen. Regenerated and re-verified by
// tests/construction_test.cpp.
struct FrozenCycle {
  int n;
  std::vector<Color> colors;
};

const std::array<FrozenCycle, 9>& frozen_table() {
  static const std::array<FrozenCycle, 9> table{{
      {6, {0, 0, 1, 0, 1, 0}},
      {7, {0, 0, 1, 0, 2, 1, 0}},
      {8, {0, 1, 0, 2, 1, 0, 2, 1}},
      {9, {0, 1, 2, 0, 1, 2, 0, 1, 2}},
      {10, {0, 1, 2, 3, 0, 1, 2, 3, 1, 2}},
      {11, {0, 1, 2, 3, 0, 1, 2, 4, 3, 1, 2}},
      {12, {0, 1, 3, 2, 4, 0, 3, 2, 1, 4, 3, 2}},
      {13, {0, 1, 3, 2, 4, 5, 0, 3, 2, 1, 4, 3, 2}},
      {15, {0, 1, 3, 4, 6, 2, 5, 1, 4, 0, 6, 3, 5, 4, 2}},
  }};
  return table;
}

}  // namespace

int cycle_rvc_closed_form(int n) {
  if (n < 3) throw PreconditionError("cycle order must be at least 3");
  const int half = (n + 1) / 2;
  if (n == 3) return 0;
  if (n == 4 || n == 5) return 1;
  if (n == 9) return 3;
  if (n == 14 || n >= 16) return half;
  return half - 1;
}

std::optional<std::vector<Color>> frozen_small_cycle_coloring(int n) {
  for (const auto& entry : frozen_table())
    if (entry.n == n) return entry.colors;
  return std::nullopt;
}

Coloring cycle_coloring(int n) {
  if (n < 3) throw PreconditionError("cycle_coloring: need n >= 3");
  const Graph cycle = make_cycle(n);
  if (n <= 5) return make_coloring(cycle, std::vector<Color>(static_cast<std::size_t>(n), 0), "cycle");
  if (auto frozen = frozen_small_cycle_coloring(n)) return make_coloring(cycle, std::move(*frozen), "cycle");

  const int half = (n + 1) / 2;
  std::vector<Color> colors(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) colors[static_cast<std::size_t>(i)] = i < half ? i : i - half;
  return make_coloring(cycle, std::move(colors), "cycle");
}

}  // namespace rvc
