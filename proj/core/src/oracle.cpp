#include "rvc/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <queue>

#include "path_search.hpp"
#include "rvc/construction.hpp"
#include "rvc/error.hpp"
#include "rvc/structure.hpp"

namespace rvc {
namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::vector<Vertex> bfs_order(const Graph& g) {
  std::vector<Vertex> order;
  std::vector<char> seen(idx(g.vertex_count()), 0);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    order.push_back(v);
    for (Vertex w : g.neighbors(v))
      if (!seen[idx(w)]) {
        seen[idx(w)] = 1;
        queue.push(w);
      }
  }
  return order;
}

void require_searchable(const Graph& g, const SearchBudget& budget, const char* op) {
  if (!is_connected(g)) throw PreconditionError(std::string(op) + ": graph is not connected");
  if (g.vertex_count() > budget.max_vertices)
    throw PreconditionError(std::string(op) + ": " + std::to_string(g.vertex_count()) +
                            " vertices exceeds the exact-search limit of " + std::to_string(budget.max_vertices) +
                            " (raise it explicitly to proceed)");
}

// Restricted-growth enumeration of k-colorings in BFS vertex order.
//
// Uncolored vertices are treated as carrying unique colors of their own.
// Recoloring them later can only create conflicts, so a pair without a
// qualifying path under this optimistic coloring rules out every completion.
template <class Set>
class ColoringSearcher {
 public:
  ColoringSearcher(const Graph& g, int k, RainbowMode mode, std::uint64_t node_budget)
      : g_(g), k_(k), mode_(mode), budget_(node_budget), order_(bfs_order(g)),
        colors_(idx(g.vertex_count())),
        search_(g, colors_, mode, std::uint64_t{1} << 40, k + g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) colors_[idx(v)] = k_ + v;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = u + 1; v < g.vertex_count(); ++v)
        if (!g.has_edge(u, v)) pairs_.push_back({u, v});
    witness_.resize(pairs_.size());
    for (std::size_t i = 0; i < pairs_.size(); ++i) pair_order_.push_back(i);
    wanted_.assign(idx(g.vertex_count()), 0);
  }

  std::optional<std::vector<Color>> run() {
    if (assign(0, 0)) return std::vector<Color>(colors_.begin(), colors_.end());
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool assign(std::size_t i, int used) {
    const int n = g_.vertex_count();
    if (i == order_.size()) return used == k_;
    const Vertex v = order_[i];
    const int top = std::min(used, k_ - 1);
    for (int c = 0; c <= top; ++c) {
      const int now_used = c == used ? used + 1 : used;
      if (n - static_cast<int>(i) - 1 < k_ - now_used) continue;
      if (++nodes_ > budget_) throw BudgetExceeded("exact search exceeded node budget", nodes_);
      colors_[idx(v)] = c;
      if (all_pairs_possible() && assign(i + 1, now_used)) return true;
    }
    colors_[idx(v)] = k_ + v;
    return false;
  }

  bool all_pairs_possible() {
    for (std::size_t pos = 0; pos < pair_order_.size(); ++pos) {
      const std::size_t p = pair_order_[pos];
      if (!witness_[p].empty() && is_rainbow_path(witness_[p], colors_, mode_)) continue;
      const auto [u, v] = pairs_[p];
      wanted_[idx(v)] = 1;
      witness_[p].clear();
      search_.run(u, wanted_, [&](Vertex, const Path& path) { witness_[p] = path; });
      wanted_[idx(v)] = 0;
      if (witness_[p].empty()) {
        // Check the pair that failed first next time.
        std::rotate(pair_order_.begin(), pair_order_.begin() + static_cast<std::ptrdiff_t>(pos),
                    pair_order_.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
        return false;
      }
    }
    return true;
  }

  const Graph& g_;
  int k_;
  RainbowMode mode_;
  std::uint64_t budget_;
  std::vector<Vertex> order_;
  std::vector<Color> colors_;
  detail::PathSearch<Set> search_;
  std::vector<VertexPair> pairs_;
  std::vector<Path> witness_;
  std::vector<std::size_t> pair_order_;
  std::vector<char> wanted_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ColoringSearch find_coloring_with(const Graph& g, int k, RainbowMode mode, const SearchBudget& budget) {
  require_searchable(g, budget, "find_coloring_with");
  const int n = g.vertex_count();
  ColoringSearch result;
  if (k < 1 || k > n) return result;
  if (k + n <= 64) {
    ColoringSearcher<detail::SmallColorSet> searcher(g, k, mode, budget.node_budget);
    result.coloring = searcher.run();
    result.nodes = searcher.nodes();
  } else {
    ColoringSearcher<detail::LargeColorSet> searcher(g, k, mode, budget.node_budget);
    result.coloring = searcher.run();
    result.nodes = searcher.nodes();
  }
  return result;
}

OracleResult exact_rvc(const Graph& g, RainbowMode mode, const SearchBudget& budget) {
  require_searchable(g, budget, "exact_rvc");
  const auto start = std::chrono::steady_clock::now();
  const int n = g.vertex_count();
  OracleResult result;
  auto finish = [&] {
    result.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
  };

  if (is_complete(g)) {
    result.value = 0;
    result.witness = make_coloring(g, std::vector<Color>(idx(n), 0), "exact");
    return finish();
  }

  const int lower = budget.diameter_lower_bound ? std::max(diameter(g) - 1, 1) : 1;
  for (int k = lower; k <= n; ++k) {
    if (budget.max_colors && k > *budget.max_colors)
      throw BudgetExceeded("no qualifying coloring with at most " + std::to_string(*budget.max_colors) + " colors",
                           result.nodes);
    SearchBudget remaining = budget;
    remaining.node_budget = budget.node_budget - std::min(budget.node_budget, result.nodes);
    auto found = find_coloring_with(g, k, mode, remaining);
    result.nodes += found.nodes;
    if (found.coloring) {
      result.value = k;
      result.witness = make_coloring(g, std::move(*found.coloring), "exact");
      return finish();
    }
  }
  // Distinct colors everywhere always qualify, so the loop returns.
  throw ConstructionError("exact_rvc: search space exhausted without a coloring");
}

std::vector<CycleTableRow> reproduce_cycle_table(int max_exact_n, int max_n, const SearchBudget& budget,
                                                 unsigned jobs) {
  if (max_exact_n > budget.max_vertices)
    throw PreconditionError("exact column up to n = " + std::to_string(max_exact_n) +
                            " exceeds the exact-search limit of " + std::to_string(budget.max_vertices));
  std::vector<CycleTableRow> rows;
  for (int n = 3; n <= max_n; ++n) {
    CycleTableRow row;
    row.n = n;
    row.closed_form = cycle_rvc_closed_form(n);
    const Graph cycle = make_cycle(n);
    const Coloring c = cycle_coloring(n);
    row.constructed = c.reported_count;
    VerifyOptions options;
    options.jobs = jobs;
    row.construction_verified = verify_rainbow_vc(cycle, c, RainbowMode::rainbow(), options).verified();
    if (n <= max_exact_n) row.exact = exact_rvc(cycle, RainbowMode::rainbow(), budget).value;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rvc
