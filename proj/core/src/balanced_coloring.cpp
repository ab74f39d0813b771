#include <algorithm>
#include <string>

#include "rvc/construction.hpp"
#include "rvc/error.hpp"
#include "rvc/verification.hpp"

namespace rvc {
namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

struct EarPlan {
  std::vector<Color> first;  // onto the first uncolored ear vertices, in order
  std::vector<Color> last;   // onto the last uncolored ear vertices, in order
  std::optional<Color> singleton;
};

// Colors laid along the ear by case; `fresh` holds x_1, x_2, ... in order.
EarPlan plan_ear(BalancedCase which, int s, Color ca, Color cb, std::optional<Color> x_prime,
                 const std::vector<Color>& fresh, std::optional<Color> singleton) {
  EarPlan plan;
  plan.singleton = singleton;
  const int run = (which == BalancedCase::even_order_odd_ear)    ? s / 2 - 1
                  : (which == BalancedCase::odd_order_even_ear)  ? (s + 1) / 2 - 2
                  : (which == BalancedCase::even_order_even_ear) ? (s + 1) / 2 - 2
                                                                 : s / 2 - 2;
  const std::vector<Color> xs(fresh.begin(), fresh.begin() + run);

  plan.last.push_back(cb);
  plan.last.insert(plan.last.end(), xs.begin(), xs.end());
  if (ca != cb) {
    plan.first = xs;
    plan.first.push_back(ca);
  } else {
    plan.first.push_back(ca);
    plan.first.insert(plan.first.end(), xs.begin(), xs.end());
  }
  if (which == BalancedCase::odd_order_even_ear || which == BalancedCase::odd_order_odd_ear)
    plan.first.push_back(*x_prime);
  return plan;
}

// Preferred 1-based ear position of the once-used color so that property (*)
// holds with respect to `target`. nullopt when the rule has no such position.
std::optional<int> preferred_singleton_position(BalancedCase which, int s, const Ear& ear,
                                                std::optional<Vertex> target, const Coloring& c_prime) {
  const int middle = (s + 1) / 2;
  if (!target) return middle;
  const auto on_ear = std::find(ear.path.begin(), ear.path.end(), *target);
  if (on_ear == ear.path.end()) {
    if (which == BalancedCase::even_order_even_ear) return middle;
    return c_prime[*target] != c_prime[ear.a()] ? s / 2 + 1 : s / 2;
  }
  const int j = static_cast<int>(on_ear - ear.path.begin()) + 1;
  if (j + middle <= s) return j + middle;
  if (j - middle >= 1) return j - middle;
  return std::nullopt;
}

}  // namespace

BalancedCase balanced_case(int h_order, int ear_length) {
  const bool h_odd = h_order % 2 == 1, ear_odd = ear_length % 2 == 1;
  if (!h_odd) return ear_odd ? BalancedCase::even_order_odd_ear : BalancedCase::even_order_even_ear;
  return ear_odd ? BalancedCase::odd_order_odd_ear : BalancedCase::odd_order_even_ear;
}

Graph attach_ear(const Graph& h, const Ear& ear) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < ear.path.size(); ++i) edges.emplace_back(ear.path[i], ear.path[i + 1]);
  return h.with_edges(edges);
}

ColoredPart colored_part(const Graph& g, const std::vector<Color>& colors) {
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (colors[idx(v)] != kNoColor) members.push_back(v);
  ColoredPart part{induced_subgraph(g, members), {}};
  for (Vertex v : members) part.colors.push_back(colors[idx(v)]);
  return part;
}

BalancedColoring balanced_coloring(const Graph& h, const Coloring& c_prime, const Ear& ear,
                                   std::optional<Vertex> star_target, PaletteLedger& ledger) {
  const int n = h.vertex_count();
  const auto& path = ear.path;
  const int s = static_cast<int>(path.size());
  if (s < 6) throw PreconditionError("balanced_coloring: ear must have at least 6 vertices, got " + std::to_string(s));
  if (c_prime.vertex_count() != n) throw PreconditionError("balanced_coloring: coloring size differs from graph");
  for (Vertex v : path)
    if (v < 0 || v >= n) throw PreconditionError("balanced_coloring: ear vertex out of range");
  {
    auto sorted = path;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionError("balanced_coloring: ear repeats a vertex");
  }
  int h_order = 0;
  for (Vertex v = 0; v < n; ++v) {
    const bool in_h = h.degree(v) > 0;
    h_order += in_h ? 1 : 0;
    if (in_h != (c_prime[v] != kNoColor))
      throw PreconditionError("balanced_coloring: coloring must cover exactly the vertices of H");
  }
  if (h.degree(ear.a()) == 0 || h.degree(ear.b()) == 0)
    throw PreconditionError("balanced_coloring: ear ends must lie in H");
  for (Vertex v : ear.interior())
    if (h.degree(v) > 0) throw PreconditionError("balanced_coloring: ear interior meets H");

  const ColorStats stats = color_stats(c_prime.colors);
  if (stats.distinct != (h_order + 1) / 2 || stats.max_multiplicity > 2)
    throw PreconditionError("balanced_coloring: input must use ceil(|H|/2) colors, each at most twice");
  std::optional<Color> x_prime;
  if (h_order % 2 == 1) {
    x_prime = stats.once_used.front();
    if (c_prime[ear.a()] == *x_prime)
      throw PreconditionError("balanced_coloring: ear start carries the once-used color");
  }

  const BalancedCase which = balanced_case(h_order, s - 1);
  const bool needs_singleton = which == BalancedCase::even_order_even_ear || which == BalancedCase::odd_order_odd_ear;

  ledger.adopt(c_prime.colors);
  std::vector<Color> fresh;
  const int fresh_runs = (which == BalancedCase::even_order_odd_ear) ? s / 2 - 1
                         : (which == BalancedCase::odd_order_odd_ear) ? s / 2 - 2
                                                                      : (s + 1) / 2 - 2;
  for (int i = 0; i < fresh_runs; ++i) fresh.push_back(ledger.fresh());
  std::optional<Color> singleton;
  if (needs_singleton) singleton = ledger.fresh();

  const EarPlan plan = plan_ear(which, s, c_prime[ear.a()], c_prime[ear.b()], x_prime, fresh, singleton);
  std::vector<Color> seq = plan.first;  // non-singleton colors in ear order
  seq.insert(seq.end(), plan.last.begin(), plan.last.end());

  auto build = [&](std::optional<int> singleton_pos) {
    std::vector<Color> colors = c_prime.colors;
    std::size_t next = 0;
    for (int pos = 1; pos <= s; ++pos) {
      const Vertex v = path[static_cast<std::size_t>(pos - 1)];
      colors[idx(v)] = (singleton_pos && pos == *singleton_pos) ? *singleton : seq[next++];
    }
    return colors;
  };

  const Graph g = attach_ear(h, ear);
  auto acceptable = [&](const std::vector<Color>& colors) {
    const ColoredPart part = colored_part(g, colors);
    if (!verify_rainbow_vc(part.sub.graph, part.colors, RainbowMode::revised()).verified()) return false;
    if (!star_target || !singleton) return true;
    const auto& map = part.sub.to_parent;
    const auto local = static_cast<Vertex>(std::find(map.begin(), map.end(), *star_target) - map.begin());
    if (part.colors[idx(local)] == *singleton) return false;
    return has_property_star(part.sub.graph, part.colors, local, *singleton);
  };

  // Singleton positions: the placement rule's choice first, then the rest of
  // the ear by distance from it.
  std::vector<std::optional<int>> positions;
  if (!needs_singleton) {
    positions.push_back(std::nullopt);
  } else {
    const int start = preferred_singleton_position(which, s, ear, star_target, c_prime).value_or((s + 1) / 2);
    positions.push_back(start);
    for (int d = 1; d < s; ++d) {
      if (start + d <= s) positions.push_back(start + d);
      if (start - d >= 1) positions.push_back(start - d);
    }
  }

  BalancedColoring out;
  out.which = which;
  ledger.once_used = singleton;
  bool found = false;
  for (const auto& pos : positions) {
    std::vector<Color> colors = build(pos);
    if (!acceptable(colors)) continue;
    out.coloring.colors = std::move(colors);
    if (pos) out.singleton_vertex = path[static_cast<std::size_t>(*pos - 1)];
    found = true;
    break;
  }
  out.verified = found;
  if (!found) {
    // Some ears admit no revised extension of c_prime at all (a short ear
    // between nearby vertices of an evenly colored cycle, for one); hand back
    // the rule's placement and let the caller decide.
    std::optional<int> pos = positions.front();
    if (pos && star_target) {
      // Never put the once-used color on the target: it is the next ear's start.
      auto usable = [&](const std::optional<int>& p) { return path[static_cast<std::size_t>(*p - 1)] != *star_target; };
      pos = *std::find_if(positions.begin(), positions.end(), usable);
    }
    out.coloring.colors = build(pos);
    if (pos) out.singleton_vertex = path[static_cast<std::size_t>(*pos - 1)];
  }
  out.coloring.reported_count = distinct_color_count(out.coloring.colors);
  out.coloring.provenance = "balanced";
  return out;
}

}  // namespace rvc
