#include <algorithm>

#include "rvc/construction.hpp"
#include "rvc/error.hpp"

namespace rvc {
namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

int block_color_bound(const Graph& g, const BlockDecomposition& blocks) {
  int total = blocks.cut_count();
  for (const auto& block : blocks.blocks) {
    const Subgraph sub = induced_subgraph(g, block);
    if (!is_complete(sub.graph)) total += cycle_rvc_closed_form(sub.graph.vertex_count());
  }
  return total;
}

Coloring block_coloring(const Graph& g, const TwoConnectedOptions& options) {
  if (!is_connected(g)) throw PreconditionError("block_coloring: graph is not connected");
  const int n = g.vertex_count();
  if (is_complete(g)) return make_coloring(g, std::vector<Color>(idx(n), 0), "complete");

  const BlockDecomposition bd = block_decomposition(g);
  std::vector<char> is_cut(idx(n), 0);
  for (Vertex v : bd.cut_vertices) is_cut[idx(v)] = 1;

  std::vector<Color> colors(idx(n), kNoColor);
  Color next = 0;
  std::optional<Color> first_palette_color;
  std::vector<const std::vector<Vertex>*> complete_blocks;

  for (const auto& block : bd.blocks) {
    const Subgraph sub = induced_subgraph(g, block);
    if (is_complete(sub.graph)) {
      complete_blocks.push_back(&block);
      continue;
    }
    const Coloring local = two_connected_coloring(sub.graph, options);
    const auto dense = compact_colors(local.colors);
    const Color offset = next;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      const Vertex v = sub.to_parent[i];
      if (!is_cut[idx(v)]) colors[idx(v)] = offset + dense[i];
    }
    if (!first_palette_color) first_palette_color = offset;
    next += *std::max_element(dense.begin(), dense.end()) + 1;
  }

  for (Vertex v : bd.cut_vertices) colors[idx(v)] = next++;
  // With no non-complete block the reused color is that of the first cut vertex.
  const Color reused = first_palette_color ? *first_palette_color : colors[idx(bd.cut_vertices.front())];
  for (const auto* block : complete_blocks)
    for (Vertex v : *block)
      if (!is_cut[idx(v)]) colors[idx(v)] = reused;

  return make_coloring(g, compact_colors(colors), "blocks");
}

Coloring auto_coloring(const Graph& g, const TwoConnectedOptions& options) {
  if (is_2_connected(g)) return two_connected_coloring(g, options);
  return block_coloring(g, options);
}

}  // namespace rvc
