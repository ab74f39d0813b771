#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rvc/coloring.hpp"
#include "rvc/decomposition.hpp"
#include "rvc/graph.hpp"
#include "rvc/structure.hpp"

namespace rvc {

/// Rainbow vertex-connection number of the cycle C_n, in closed form:
/// 0 (n = 3), 1 (n = 4, 5), 3 (n = 9), ceil(n/2) - 1 (n = 6..8, 10..13, 15),
/// ceil(n/2) (n = 14 or n >= 16). It also bounds rvc of every 2-connected
/// graph of order n. Throws PreconditionError for n < 3.
int cycle_rvc_closed_form(int n);

/// Coloring of C_n with vertices 0..n-1 in cyclic order using
/// cycle_rvc_closed_form(n) colors. Small orders use precomputed witnesses;
/// n = 14 and n >= 16 use the wraparound coloring i mod ceil(n/2).
Coloring cycle_coloring(int n);

/// Witness colorings for the cycles with n in {6..13, 15}, found by the exact
/// search and frozen. Returns nullopt for other n.
std::optional<std::vector<Color>> frozen_small_cycle_coloring(int n);

enum class BalancedCase {
  even_order_odd_ear = 1,   // |H| even, l(P) odd
  odd_order_even_ear = 2,   // |H| odd,  l(P) even
  even_order_even_ear = 3,  // |H| even, l(P) even; one fresh singleton color
  odd_order_odd_ear = 4,    // |H| odd,  l(P) odd;  one fresh singleton color
};

BalancedCase balanced_case(int h_order, int ear_length);

struct BalancedColoring {
  /// Defined on the vertices of H + P (kNoColor elsewhere).
  Coloring coloring;
  BalancedCase which = BalancedCase::even_order_odd_ear;
  /// Vertex carrying the fresh once-used color (cases 3 and 4).
  std::optional<Vertex> singleton_vertex;
  /// The coloring is revised rainbow on H + P and, when a target was given
  /// and |H + P| is odd, has property (*) there.
  bool verified = false;
};

/// Extends the coloring `c_prime` of H (the non-isolated vertices of `h`) across
/// the ear `ear`, whose ends lie in H and whose at least four interior vertices
/// are isolated in `h`.
///
/// c_prime must use ceil(|H|/2) colors, each at most twice. When |H| is odd
/// its unique once-used color x' (with c_prime(a) != x') is reused on the ear.
/// When |H + P| is odd the fresh once-used color is placed so that property
/// (*) holds with respect to `star_target` (middle ear vertex if none given).
/// Candidate placements are checked with the revised verifier; if none passes
/// the rule's placement is returned with `verified` false.
///
/// Fresh colors come from `ledger`; `ledger.once_used` is updated.
BalancedColoring balanced_coloring(const Graph& h, const Coloring& c_prime, const Ear& ear,
                                   std::optional<Vertex> star_target, PaletteLedger& ledger);

/// h with the ear's edges added.
Graph attach_ear(const Graph& h, const Ear& ear);

/// Wraparound coloring of the initial cycle extended by balanced colorings,
/// ceil(n/2) colors each used at most twice, for a 2-connected g of order
/// >= 16 whose decomposition `d` has only ears of length >= 5 (or none).
/// Revised rainbow whenever every balanced step verified; not checked here.
Coloring long_ear_coloring(const Graph& g, const EarDecomposition& d);

struct TwoConnectedOptions {
  std::uint64_t node_budget = 20'000'000;
  unsigned jobs = 1;
  /// Below order 16, search exhaustively for a coloring with the closed-form
  /// number of colors when the ear construction needs more.
  bool allow_exact_fallback = true;
};

/// Coloring of a 2-connected graph with at most cycle_rvc_closed_form(n)
/// colors; verified before it is returned. Throws PreconditionError unless g is
/// 2-connected, ConstructionError if no candidate verifies.
Coloring two_connected_coloring(const Graph& g, const TwoConnectedOptions& options = {});

/// Per-block bound used by block_coloring: 0 for complete blocks (including
/// K2), cycle_rvc_closed_form(|B|) otherwise.
int block_color_bound(const Graph& g, const BlockDecomposition& blocks);

/// Composes per-block colorings with disjoint palettes and fresh colors on the
/// cut vertices. Throws PreconditionError on disconnected input.
Coloring block_coloring(const Graph& g, const TwoConnectedOptions& options = {});

/// Dispatch used by the CLI: cycle, 2-connected, otherwise blocks.
Coloring auto_coloring(const Graph& g, const TwoConnectedOptions& options = {});

/// The part of `g` carrying colors in `c`, relabelled densely, with the
/// matching color vector.
struct ColoredPart {
  Subgraph sub;
  std::vector<Color> colors;
};
ColoredPart colored_part(const Graph& g, const std::vector<Color>& colors);

}  // namespace rvc
