#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "privlabel/coverfree.hpp"
#include "privlabel/graph.hpp"
#include "privlabel/labels.hpp"
#include "privlabel/sim/engine.hpp"

namespace privlabel {

using Color = std::uint64_t;

struct ColoringRun {
  std::vector<Color> colors;
  sim::RunStats stats;
};

/// Cole-Vishkin color reduction on an oriented forest (parent = the unique
/// out-neighbor), followed by the shift-down elimination of colors 5, 4, 3.
/// Throws std::invalid_argument if some vertex has out-degree > 1 or the
/// orientation is cyclic.
ColoringRun cole_vishkin_3coloring(const Graph& g, const Orientation& forest, const sim::RunOptions& opt);

/// Number of Cole-Vishkin bit-reduction steps used for n vertices; the
/// whole run takes this plus 6 rounds.
std::size_t cole_vishkin_steps(std::size_t n);

/// {<i, phi(v)> : 0 <= i < delta} encoded as 3i + phi(v); palette 3 * delta.
/// Throws if delta == 0 or some color is >= 3.
LabelDomain expand_to_generic(std::span<const Color> coloring, std::size_t delta);

struct RandomColoringResult {
  LabelDomain domains;
  sim::RunStats stats;
  std::size_t k = 0;
  /// Value range [2 * Delta] of each drawn tuple.
  std::size_t value_range = 0;
  /// Vertices whose domain was pruned to nothing.
  std::vector<VertexId> empty;
  bool failed() const { return !empty.empty(); }
};

/// One-round generic random coloring: every vertex draws k = ceil(c log2 n)
/// tuples <i, x_i> with x_i uniform in [2 Delta], exchanges them, and drops
/// every tuple a neighbor also drew.
RandomColoringResult generic_random_coloring(const Graph& g, double c, const sim::RunOptions& opt,
                                             std::optional<std::size_t> degree_bound = std::nullopt);

/// One Linial step: each vertex replaces color x with the smallest-abscissa
/// element of S_x not covered by any neighbor's set. Colors must be
/// < fam.family_size() and fam must be Delta-cover-free for Delta = degree
/// bound; otherwise std::invalid_argument before running. An improper input
/// coloring surfaces as std::runtime_error.
ColoringRun linial_reduce_round(const Graph& g, std::span<const Color> current, const PolyFamily& fam,
                                const sim::RunOptions& opt, std::optional<std::size_t> degree_bound = std::nullopt);

struct LinialStep {
  std::uint64_t d;
  std::uint64_t q;
};

/// Proper-coloring reduction schedule from palette n down to <= target
/// (target = q_f^3 for the delta2 pipeline). Each step picks d in {1,2,3}
/// minimizing the new palette q_d^2 and stops when no step shrinks.
std::vector<LinialStep> linial_schedule(std::uint64_t palette, std::uint64_t delta, std::uint64_t target);

struct Delta2Result {
  LabelDomain domains;
  sim::RunStats stats;
  std::uint64_t q_final = 0;
  std::vector<LinialStep> schedule;
};

/// Deterministic generic O(Delta^2) coloring: IDs, then Linial steps until
/// the palette is <= q_f^3, then one cover-free round with degree-2 polynomials over GF(q_f),
/// keeping every uncovered element. q_f = smallest prime >= 3 max(Delta, 1).
Delta2Result generic_delta2_coloring(const Graph& g, const sim::RunOptions& opt,
                                     std::optional<std::size_t> degree_bound = std::nullopt);

struct DefectiveResult {
  LabelDomain domains;
  sim::RunStats stats;
  std::uint64_t p = 0;
  std::uint64_t q_final = 0;
  /// Palette handed to the defective round.
  std::uint64_t handoff_palette = 0;
  std::vector<LinialStep> schedule;
  /// Guaranteed per-vertex domain floor q_f - floor(2 Delta / (p + 1)).
  std::uint64_t domain_floor = 0;
};

/// Generic p-defective coloring: proper Linial steps, then one round over
/// GF(q_f), d = 2, keeping the elements of S_phi(v) that at most p
/// neighbors' sets contain. Throws std::invalid_argument unless
/// 1 <= p <= max(Delta, 1).
DefectiveResult generic_defective_coloring(const Graph& g, std::uint64_t p, const sim::RunOptions& opt,
                                           std::optional<std::size_t> degree_bound = std::nullopt);

}  // namespace privlabel
