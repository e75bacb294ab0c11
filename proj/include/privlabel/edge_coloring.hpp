#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "privlabel/coloring.hpp"
#include "privlabel/graph.hpp"
#include "privlabel/labels.hpp"
#include "privlabel/sim/engine.hpp"

namespace privlabel {

enum class LineGraphVariant { random, delta2 };

struct LineGraphColoring {
  /// Edge-indexed domains.
  LabelDomain domains;
  sim::RunStats stats;
  /// Degree bound handed to the vertex algorithm: 2 Delta(G) - 1.
  std::size_t line_degree_bound = 0;
  /// Random variant: k (computed with n = m). Delta2 variant: q_f.
  std::uint64_t parameter = 0;
  std::vector<EdgeId> empty;
  bool failed() const { return !empty.empty(); }
};

/// Runs the random or O(Delta^2) vertex algorithm on L(G) with degree bound
/// 2 Delta(G) - 1; edge e of G is line-graph vertex e. Rounds are counted
/// on L(G).
LineGraphColoring edge_coloring_via_line_graph(const Graph& g, LineGraphVariant variant, const sim::RunOptions& opt,
                                               double c = 4.0);

/// Kuhn colors are unordered pairs {a <= b} over 1..L, L = ceil(Delta / i).
std::uint64_t kuhn_palette_size(std::uint64_t numbers);
std::uint64_t kuhn_color_index(std::uint64_t a, std::uint64_t b, std::uint64_t numbers);
std::pair<std::uint64_t, std::uint64_t> kuhn_color_pair(std::uint64_t index, std::uint64_t numbers);

struct KuhnColoring {
  /// Color index of each edge in [kuhn_palette_size(numbers)].
  std::vector<std::uint64_t> colors;
  std::uint64_t multiplicity = 0;
  std::uint64_t numbers = 0;
  std::uint64_t palette = 0;
  sim::RunStats stats;
};

/// One round: every vertex places its incident edges in distinct uniformly
/// random slots among L * i, slot j giving number ceil(j / i), and tells each
/// neighbor the number of their shared edge; edge color = {e_u, e_v}.
/// Throws std::invalid_argument unless 1 <= i <= max(Delta, 1).
KuhnColoring kuhn_defective_edge_coloring(const Graph& g, std::uint64_t i, const sim::RunOptions& opt,
                                          std::optional<std::size_t> degree_bound = std::nullopt);

struct EdgeColoringRun {
  /// Final color per edge; empty where the round budget ran out.
  std::vector<std::optional<std::uint64_t>> colors;
  sim::RunStats stats;
};

/// Random-proposal proper edge coloring on L(G): an uncolored edge proposes
/// a color not finalized around it and keeps it unless an adjacent edge
/// proposed or finalized the same color. Throws if palette < 2 Delta - 1.
EdgeColoringRun simple_edge_coloring(const Graph& g, std::uint64_t palette, const sim::RunOptions& opt);

struct MatchingRun {
  std::vector<EdgeId> matching;
  /// False where the round budget ran out before the edge was decided.
  bool complete = true;
  sim::RunStats stats;
};

/// Luby-style maximal matching on L(G): active edges draw priorities, local
/// maxima join, their neighbors drop out.
MatchingRun maximal_matching(const Graph& g, const sim::RunOptions& opt);

struct DominatingColoredSet {
  std::vector<std::uint64_t> base_colors;
  /// Class of every edge, 1-based.
  std::vector<std::uint32_t> class_of;
  std::vector<char> in_d;
  /// Edges of D in increasing index order; entity j of `domains` is d_edges[j].
  std::vector<EdgeId> d_edges;
  LabelDomain domains;
  std::uint64_t classes = 0;
  std::uint64_t class_width = 0;
  std::uint64_t base_palette = 0;
  std::uint64_t t = 0;
  std::size_t coloring_rounds = 0;
  std::size_t matching_rounds = 0;
  bool complete = true;

  std::size_t rounds() const { return coloring_rounds + matching_rounds; }
};

/// Base (c Delta)-edge coloring, s = ceil(sqrt Delta) classes of width
/// ceil(c Delta / s), an independent maximal matching per class; edges of
/// the class-i matching get domain {(i-1)t, ..., it-1}. Requires Delta >= 1,
/// c >= 2, t >= 2.
DominatingColoredSet dominating_edge_coloring(const Graph& g, std::uint64_t c, std::uint64_t t,
                                              const sim::RunOptions& opt);

/// ceil(sqrt(x)) computed exactly.
std::uint64_t ceil_sqrt(std::uint64_t x);

}  // namespace privlabel
