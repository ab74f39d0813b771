#include "rvc/verification.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "path_search.hpp"
#include "rvc/error.hpp"
#include "rvc/structure.hpp"

namespace rvc {
namespace {

void require_total_coloring(const Graph& g, std::span<const Color> colors) {
  if (static_cast<int>(colors.size()) != g.vertex_count())
    throw PreconditionError("coloring has " + std::to_string(colors.size()) + " entries for " +
                            std::to_string(g.vertex_count()) + " vertices");
  for (Color c : colors)
    if (c < 0) throw PreconditionError("coloring leaves a vertex uncolored");
}

struct SourceResult {
  std::optional<Vertex> failing_target;
  std::map<VertexPair, Path> witnesses;
};

template <class Search>
SourceResult check_source(Search& search, const Graph& g, Vertex u, bool store) {
  const int n = g.vertex_count();
  std::vector<char> wanted(static_cast<std::size_t>(n), 0);
  for (Vertex v = u + 1; v < n; ++v) wanted[static_cast<std::size_t>(v)] = 1;
  SourceResult result;
  const int left = search.run(u, wanted, [&](Vertex v, const Path& p) {
    if (store) result.witnesses.emplace(VertexPair{u, v}, p);
  });
  if (left > 0) {
    auto it = std::find(wanted.begin(), wanted.end(), 1);
    result.failing_target = static_cast<Vertex>(it - wanted.begin());
  }
  return result;
}

}  // namespace

bool is_rainbow_path(std::span<const Vertex> path, std::span<const Color> colors, RainbowMode mode) {
  auto color = [&](Vertex v) { return colors[static_cast<std::size_t>(v)]; };
  if (mode.forbidden_color)
    for (Vertex v : path)
      if (color(v) == *mode.forbidden_color) return false;
  if (path.size() <= 2) return true;

  std::vector<Color> internal;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) internal.push_back(color(path[i]));
  std::sort(internal.begin(), internal.end());
  if (std::adjacent_find(internal.begin(), internal.end()) != internal.end()) return false;
  if (mode.kind == PathKind::rainbow) return true;
  for (Vertex end : {path.front(), path.back()})
    if (std::binary_search(internal.begin(), internal.end(), color(end))) return false;
  return true;
}

std::optional<Path> exists_rainbow_path(const Graph& g, std::span<const Color> colors, Vertex u, Vertex v,
                                        RainbowMode mode, std::uint64_t node_budget) {
  if (u == v) throw PreconditionError("exists_rainbow_path: endpoints must differ");
  require_total_coloring(g, colors);
  const auto color = [&](Vertex w) { return colors[static_cast<std::size_t>(w)]; };
  if (mode.forbidden_color && (color(u) == *mode.forbidden_color || color(v) == *mode.forbidden_color))
    return std::nullopt;
  if (g.has_edge(u, v)) return Path{u, v};

  std::vector<char> wanted(static_cast<std::size_t>(g.vertex_count()), 0);
  wanted[static_cast<std::size_t>(v)] = 1;
  std::optional<Path> found;
  detail::with_path_search(g, colors, mode, node_budget, [&](auto& search) {
    search.run(u, wanted, [&](Vertex, const Path& p) { found = p; });
  });
  return found;
}

Certificate verify_rainbow_vc(const Graph& g, std::span<const Color> colors, RainbowMode mode,
                              const VerifyOptions& options) {
  require_total_coloring(g, colors);
  if (!is_connected(g)) throw PreconditionError("verify_rainbow_vc: graph is not connected");

  Certificate cert;
  cert.mode = mode;
  const int n = g.vertex_count();
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max(1, n - 1))));

  if (jobs == 1) {
    detail::with_path_search(g, colors, mode, options.node_budget, [&](auto& search) {
      for (Vertex u = 0; u + 1 < n; ++u) {
        auto r = check_source(search, g, u, options.store_witnesses);
        if (r.failing_target) {
          cert.status = Certificate::Status::counterexample;
          cert.failing_pair = VertexPair{u, *r.failing_target};
          cert.witnesses.clear();
          return;
        }
        cert.witnesses.merge(r.witnesses);
      }
    });
    return cert;
  }

  // Workers pull sources in increasing order; sources past the smallest
  // failing source are skipped, so the reported pair is schedule-independent.
  std::atomic<Vertex> next{0};
  std::atomic<Vertex> first_failure{n};
  std::vector<SourceResult> results(static_cast<std::size_t>(n));
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      detail::with_path_search(g, colors, mode, options.node_budget, [&](auto& search) {
        for (Vertex u = next++; u + 1 < n; u = next++) {
          if (u > first_failure.load()) break;
          auto r = check_source(search, g, u, options.store_witnesses);
          if (r.failing_target) {
            Vertex seen = first_failure.load();
            while (u < seen && !first_failure.compare_exchange_weak(seen, u)) {
            }
          }
          results[static_cast<std::size_t>(u)] = std::move(r);
        }
      });
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  const Vertex fail = first_failure.load();
  if (fail < n) {
    cert.status = Certificate::Status::counterexample;
    cert.failing_pair = VertexPair{fail, *results[static_cast<std::size_t>(fail)].failing_target};
    return cert;
  }
  for (auto& r : results) cert.witnesses.merge(r.witnesses);
  return cert;
}

bool has_property_star(const Graph& g, std::span<const Color> colors, Vertex v, Color x,
                       std::uint64_t node_budget) {
  require_total_coloring(g, colors);
  if (colors[static_cast<std::size_t>(v)] == x)
    throw PreconditionError("has_property_star: c(v) equals the excluded color");
  std::vector<char> wanted(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (u != v && colors[static_cast<std::size_t>(u)] != x) wanted[static_cast<std::size_t>(u)] = 1;
  const RainbowMode mode{PathKind::revised_rainbow, x};
  return detail::with_path_search(g, colors, mode, node_budget, [&](auto& search) {
    return search.run(v, wanted, [](Vertex, const Path&) {}) == 0;
  });
}

ColorStats color_stats(std::span<const Color> colors) {
  ColorStats stats;
  for (Color c : colors)
    if (c != kNoColor) ++stats.multiplicity[c];
  stats.distinct = static_cast<int>(stats.multiplicity.size());
  for (auto [color, uses] : stats.multiplicity) {
    ++stats.histogram[uses];
    stats.max_multiplicity = std::max(stats.max_multiplicity, uses);
    if (uses == 1) stats.once_used.push_back(color);
  }
  return stats;
}

}  // namespace rvc
