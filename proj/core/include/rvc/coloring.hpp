#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rvc/graph.hpp"

namespace rvc {

/// Vertex coloring plus the color count in the rainbow-connection sense.
///
/// `reported_count` equals the number of distinct colors, except that it is 0
/// on complete graphs, where every vertex still carries one physical color.
/// Entries equal to kNoColor mark vertices outside the colored subgraph; they
/// only occur in intermediate colorings of ear-built subgraphs.
struct Coloring {
  std::vector<Color> colors;
  int reported_count = 0;
  std::string provenance;

  int vertex_count() const { return static_cast<int>(colors.size()); }
  Color operator[](Vertex v) const { return colors[static_cast<std::size_t>(v)]; }
};

/// Distinct colors, ignoring kNoColor entries.
int distinct_color_count(std::span<const Color> colors);

/// Relabels colors to 0..k-1, preserving the relative order of the original ids.
std::vector<Color> compact_colors(std::span<const Color> colors);

/// Wraps an assignment, computing `reported_count` with the complete-graph convention.
Coloring make_coloring(const Graph& g, std::vector<Color> colors, std::string provenance);

/// Bookkeeping for colors inherited from a sub-coloring versus freshly
/// allocated ones. Fresh ids come from a monotone counter and are never reused.
class PaletteLedger {
 public:
  PaletteLedger() = default;

  /// Marks every color of `colors` as old and moves the counter past them.
  void adopt(std::span<const Color> colors);

  Color fresh();

  const std::vector<Color>& new_colors() const { return new_colors_; }
  Color next_fresh() const { return next_; }
  bool is_new(Color c) const;

  /// The color used exactly once in an odd-order coloring, if any.
  std::optional<Color> once_used;

 private:
  Color next_ = 0;
  Color first_new_ = -1;
  std::vector<Color> new_colors_;
};

}  // namespace rvc
