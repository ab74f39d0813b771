#include <algorithm>
#include <numeric>
#include <string>

#include "rvc/construction.hpp"
#include "rvc/error.hpp"
#include "rvc/generators.hpp"
#include "rvc/oracle.hpp"
#include "rvc/verification.hpp"

namespace rvc {
namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Wraparound coloring of the initial cycle followed by one balanced coloring
// per ear; every ear must have length >= 5. Vertices outside G0 + ears keep
// kNoColor.
std::vector<Color> color_long_part(int n, const std::vector<Vertex>& cycle, std::span<const Ear> ears,
                                   PaletteLedger& ledger) {
  std::vector<Color> colors(idx(n), kNoColor);
  const int len = static_cast<int>(cycle.size());
  const int half = (len + 1) / 2;
  for (int i = 0; i < len; ++i) colors[idx(cycle[idx(i)])] = i < half ? i : i - half;
  ledger.adopt(colors);
  if (len % 2 == 1) ledger.once_used = half - 1;

  Graph current = cycle_graph_on(n, cycle);
  for (std::size_t i = 0; i < ears.size(); ++i) {
    const std::optional<Vertex> next_start = i + 1 < ears.size() ? std::optional(ears[i + 1].a()) : std::nullopt;
    Coloring c_prime{colors, 0, "balanced"};
    auto step = balanced_coloring(current, c_prime, ears[i], next_start, ledger);
    colors = std::move(step.coloring.colors);
    current = attach_ear(current, ears[i]);
  }
  return colors;
}

// Colors the ears of length 2..4 on top of the coloring of G_t. `x` is the
// reused color of G_t; every fresh color comes from a copy of the ledger.
std::vector<Color> color_short_ears(const std::vector<Color>& base, std::vector<Ear> shorts, Color x,
                                    PaletteLedger ledger) {
  std::stable_sort(shorts.begin(), shorts.end(), [](const Ear& l, const Ear& r) {
    if (l.length() != r.length()) return l.length() > r.length();
    return l.path < r.path;
  });
  const auto length4 = std::count_if(shorts.begin(), shorts.end(), [](const Ear& e) { return e.length() == 4; });
  std::optional<Color> x0;
  if (length4 >= 2) x0 = ledger.fresh();

  std::vector<Color> colors = base;
  for (const Ear& ear : shorts) {
    const auto& p = ear.path;
    const Vertex a = ear.a();
    // A start vertex recolored by an earlier ear hands on its G_t color.
    const Color moved = base[idx(a)] != kNoColor ? base[idx(a)] : colors[idx(a)];
    switch (ear.length()) {
      case 4: {
        const Color xj = ledger.fresh();
        colors[idx(a)] = xj;
        colors[idx(p[3])] = xj;
        colors[idx(p[1])] = moved;
        colors[idx(p[2])] = length4 == 1 ? x : *x0;
        break;
      }
      case 3: {
        const Color xj = ledger.fresh();
        colors[idx(a)] = xj;
        colors[idx(p[2])] = xj;
        colors[idx(p[1])] = moved;
        break;
      }
      case 2:
        colors[idx(p[1])] = x;
        break;
      default:
        throw PreconditionError("color_short_ears: ear length must be 2, 3 or 4");
    }
  }
  return colors;
}

Coloring constant_coloring(const Graph& g, std::string provenance) {
  return make_coloring(g, std::vector<Color>(idx(g.vertex_count()), 0), std::move(provenance));
}

// Colorings from one ear decomposition of g: the long part, then the short
// ears once per candidate reuse color x.
std::vector<std::vector<Color>> ear_candidates(const Graph& g) {
  const int n = g.vertex_count();
  const EarDecomposition d = ear_decomposition(g);
  std::vector<Ear> long_ears, short_ears;
  for (int i = 0; i < d.long_count; ++i) {
    const Ear& ear = d.ears[idx(i)];
    (ear.length() >= 5 ? long_ears : short_ears).push_back(ear);
  }

  PaletteLedger ledger;
  std::vector<Color> base;
  try {
    base = color_long_part(n, d.initial_cycle, long_ears, ledger);
  } catch (const PreconditionError&) {
    return {};
  }

  std::vector<std::vector<Color>> candidates;
  if (short_ears.empty()) {
    candidates.push_back(base);
    return candidates;
  }
  const bool uses_x = std::any_of(short_ears.begin(), short_ears.end(), [](const Ear& e) { return e.length() == 2; }) ||
                      std::count_if(short_ears.begin(), short_ears.end(), [](const Ear& e) { return e.length() == 4; }) == 1;
  std::vector<Color> palette;
  for (Color c : base)
    if (c != kNoColor) palette.push_back(c);
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  std::vector<Color> xs{ledger.once_used.value_or(palette.front())};
  if (uses_x)
    for (Color c : palette)
      if (c != xs.front()) xs.push_back(c);
  for (Color x : xs) candidates.push_back(color_short_ears(base, short_ears, x, ledger));
  return candidates;
}

constexpr int kRelabelAttempts = 8;

}  // namespace

Coloring long_ear_coloring(const Graph& g, const EarDecomposition& d) {
  if (!is_2_connected(g)) throw PreconditionError("long_ear_coloring: graph is not 2-connected");
  if (g.vertex_count() < 16) throw PreconditionError("long_ear_coloring: need n >= 16");
  for (const Ear& ear : d.ears)
    if (ear.length() < 5) throw PreconditionError("long_ear_coloring: decomposition has an ear shorter than 5");
  if (d.initial_cycle.size() % 2 == 1 && !d.ears.empty())
    throw PreconditionError("long_ear_coloring: odd initial cycle with ears");
  if (replay_decomposition(g.vertex_count(), d) != g)
    throw PreconditionError("long_ear_coloring: decomposition does not rebuild the graph");
  PaletteLedger ledger;
  auto colors = color_long_part(g.vertex_count(), d.initial_cycle, d.ears, ledger);
  return make_coloring(g, std::move(colors), "long-ears");
}

Coloring two_connected_coloring(const Graph& g, const TwoConnectedOptions& options) {
  if (!is_2_connected(g)) throw PreconditionError("two_connected_coloring: graph is not 2-connected");
  const int n = g.vertex_count();
  if (is_complete(g)) return constant_coloring(g, "complete");
  if (is_cycle_graph(g)) {
    const auto order = cycle_order(g);
    const Coloring on_cycle = cycle_coloring(n);
    std::vector<Color> colors(idx(n));
    for (int i = 0; i < n; ++i) colors[idx(order[idx(i)])] = on_cycle.colors[idx(i)];
    return make_coloring(g, std::move(colors), "cycle");
  }

  const int bound = cycle_rvc_closed_form(n);
  VerifyOptions verify;
  verify.jobs = options.jobs;
  verify.node_budget = options.node_budget;

  // Ties in the decomposition are broken by vertex id, so relabeled copies
  // give different decompositions. The first copy is the identity.
  std::vector<Vertex> perm(idx(n));
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(0x5eed);
  for (int attempt = 0; attempt < kRelabelAttempts; ++attempt) {
    if (attempt > 0)
      for (std::size_t i = perm.size() - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(perm[idx(e.u)], perm[idx(e.v)]);
    const Graph relabeled(n, edges);
    for (auto& colors : ear_candidates(relabeled)) {
      std::vector<Color> back(idx(n));
      for (Vertex v = 0; v < n; ++v) back[idx(v)] = colors[idx(perm[idx(v)])];
      if (distinct_color_count(back) > bound) continue;
      if (verify_rainbow_vc(g, back, RainbowMode::rainbow(), verify).verified())
        return make_coloring(g, std::move(back), "two-connected");
    }
  }

  if (n <= 15 && options.allow_exact_fallback) {
    SearchBudget budget;
    budget.max_vertices = n;
    budget.node_budget = options.node_budget;
    auto found = find_coloring_with(g, bound, RainbowMode::rainbow(), budget);
    if (found.coloring) return make_coloring(g, std::move(*found.coloring), "exact-search");
  }
  throw ConstructionError("two_connected_coloring: no candidate coloring with at most " + std::to_string(bound) +
                          " colors verified");
}

}  // namespace rvc
