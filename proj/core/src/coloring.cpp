#include "rvc/coloring.hpp"

#include <algorithm>

#include "rvc/structure.hpp"

namespace rvc {

int distinct_color_count(std::span<const Color> colors) {
  std::vector<Color> sorted;
  for (Color c : colors)
    if (c != kNoColor) sorted.push_back(c);
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::vector<Color> compact_colors(std::span<const Color> colors) {
  std::vector<Color> ids;
  for (Color c : colors)
    if (c != kNoColor) ids.push_back(c);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Color> out(colors.begin(), colors.end());
  for (Color& c : out)
    if (c != kNoColor) c = static_cast<Color>(std::lower_bound(ids.begin(), ids.end(), c) - ids.begin());
  return out;
}

Coloring make_coloring(const Graph& g, std::vector<Color> colors, std::string provenance) {
  Coloring out;
  out.reported_count = is_complete(g) ? 0 : distinct_color_count(colors);
  out.colors = std::move(colors);
  out.provenance = std::move(provenance);
  return out;
}

void PaletteLedger::adopt(std::span<const Color> colors) {
  for (Color c : colors)
    if (c != kNoColor) next_ = std::max(next_, c + 1);
}

Color PaletteLedger::fresh() {
  if (first_new_ < 0) first_new_ = next_;
  new_colors_.push_back(next_);
  return next_++;
}

bool PaletteLedger::is_new(Color c) const { return first_new_ >= 0 && c >= first_new_; }

}  // namespace rvc
