#pragma once

// Depth-first enumeration of qualifying (rainbow / revised rainbow) paths
// from one source. Shared by the verifier and the exact oracle.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "rvc/error.hpp"
#include "rvc/graph.hpp"
#include "rvc/verification.hpp"

namespace rvc::detail {

/// Color sets over a universe of at most 64 colors.
struct SmallColorSet {
  std::uint64_t bits = 0;

  static SmallColorSet empty(int /*universe*/) { return {}; }
  bool contains(Color c) const { return (bits >> c) & 1U; }
  SmallColorSet with(Color c) const { return {bits | (std::uint64_t{1} << c)}; }
  friend bool operator==(const SmallColorSet&, const SmallColorSet&) = default;

  struct Hash {
    std::size_t operator()(const SmallColorSet& s) const noexcept {
      return std::hash<std::uint64_t>{}(s.bits * 0x9E3779B97F4A7C15ULL);
    }
  };
};

class LargeColorSet {
 public:
  static LargeColorSet empty(int universe) {
    LargeColorSet s;
    s.words_.assign(static_cast<std::size_t>((universe + 63) / 64), 0);
    return s;
  }
  bool contains(Color c) const { return (words_[static_cast<std::size_t>(c) / 64] >> (c % 64)) & 1U; }
  LargeColorSet with(Color c) const {
    LargeColorSet s = *this;
    s.words_[static_cast<std::size_t>(c) / 64] |= std::uint64_t{1} << (c % 64);
    return s;
  }
  friend bool operator==(const LargeColorSet&, const LargeColorSet&) = default;

  struct Hash {
    std::size_t operator()(const LargeColorSet& s) const noexcept {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (std::uint64_t w : s.words_) h = (h ^ w) * 0x100000001b3ULL;
      return static_cast<std::size_t>(h);
    }
  };

 private:
  std::vector<std::uint64_t> words_;
};

/// One search object per graph/coloring; `run` may be called repeatedly.
///
/// A search state is (current endpoint, colors of the internal vertices so
/// far). Internal vertices are distinct colors, so they cannot repeat, and a
/// state reached twice can discover nothing new; visited states are memoised.
template <class Set>
class PathSearch {
 public:
  PathSearch(const Graph& g, std::span<const Color> colors, RainbowMode mode, std::uint64_t node_budget,
             int color_universe)
      : g_(g),
        colors_(colors),
        mode_(mode),
        budget_(node_budget),
        universe_(color_universe),
        memo_(static_cast<std::size_t>(g.vertex_count())) {}

  void set_colors(std::span<const Color> colors) { colors_ = colors; }

  /// Explores qualifying paths from `source` until every vertex with
  /// wanted[v] != 0 has been reached or the search space is exhausted.
  /// Reached targets get wanted[v] = 0 and trigger on_found(v, path).
  /// Returns the number of targets left unreached.
  template <class OnFound>
  int run(Vertex source, std::vector<char>& wanted, OnFound&& on_found) {
    for (Vertex v : touched_) memo_[static_cast<std::size_t>(v)].clear();
    touched_.clear();
    nodes_ = 0;
    remaining_ = 0;
    for (char w : wanted) remaining_ += w ? 1 : 0;
    if (remaining_ == 0) return 0;
    source_ = source;
    source_color_ = color(source);
    if (mode_.forbidden_color && source_color_ == *mode_.forbidden_color) return remaining_;
    wanted_ = &wanted;
    path_.assign(1, source);
    dfs(source, Set::empty(universe_), on_found);
    return remaining_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Color color(Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }

  bool excluded(Color c) const { return mode_.forbidden_color && c == *mode_.forbidden_color; }

  template <class OnFound>
  bool dfs(Vertex x, const Set& used, OnFound& on_found) {
    const bool revised = mode_.kind == PathKind::revised_rainbow;
    auto nbrs = g_.neighbors(x);
    std::vector<char>& wanted = *wanted_;

    for (Vertex y : nbrs) {
      if (!wanted[static_cast<std::size_t>(y)]) continue;
      const Color cy = color(y);
      if (excluded(cy) || (revised && used.contains(cy))) continue;
      path_.push_back(y);
      on_found(y, static_cast<const Path&>(path_));
      path_.pop_back();
      wanted[static_cast<std::size_t>(y)] = 0;
      if (--remaining_ == 0) return true;
    }

    for (Vertex y : nbrs) {
      if (y == source_) continue;
      const Color cy = color(y);
      if (excluded(cy) || used.contains(cy) || (revised && cy == source_color_)) continue;
      Set next = used.with(cy);
      auto& seen = memo_[static_cast<std::size_t>(y)];
      if (seen.empty()) touched_.push_back(y);
      if (!seen.insert(next).second) continue;
      if (++nodes_ > budget_)
        throw BudgetExceeded("path search from vertex " + std::to_string(source_) + " exceeded node budget " +
                                 std::to_string(budget_),
                             nodes_);
      path_.push_back(y);
      if (dfs(y, next, on_found)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::span<const Color> colors_;
  RainbowMode mode_;
  std::uint64_t budget_;
  int universe_;
  std::vector<std::unordered_set<Set, typename Set::Hash>> memo_;
  std::vector<Vertex> touched_;
  std::vector<char>* wanted_ = nullptr;
  Path path_;
  Vertex source_ = 0;
  Color source_color_ = 0;
  int remaining_ = 0;
  std::uint64_t nodes_ = 0;
};

inline int color_universe(std::span<const Color> colors) {
  Color top = -1;
  for (Color c : colors) top = std::max(top, c);
  return top + 1;
}

/// Calls f(search) with a PathSearch specialised for the color universe size.
template <class F>
decltype(auto) with_path_search(const Graph& g, std::span<const Color> colors, RainbowMode mode,
                                std::uint64_t budget, F&& f) {
  int universe = color_universe(colors);
  if (mode.forbidden_color) universe = std::max(universe, *mode.forbidden_color + 1);
  if (universe <= 64) {
    PathSearch<SmallColorSet> search(g, colors, mode, budget, universe);
    return f(search);
  }
  PathSearch<LargeColorSet> search(g, colors, mode, budget, universe);
  return f(search);
}

}  // namespace rvc::detail
