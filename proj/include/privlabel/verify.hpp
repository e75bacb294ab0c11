#pragma once

// Independent checkers. Nothing here calls into the algorithm code; each
// check recomputes its property from the graph and the claimed output.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "privlabel/graph.hpp"
#include "privlabel/labels.hpp"

namespace privlabel::verify {

enum class Status { pass, fail, incomplete, degenerate };

std::string_view to_string(Status s);

struct Verdict {
  std::string name;
  Status status = Status::pass;
  /// Human-readable reason when not passing.
  std::string detail;
  /// Offending entities (vertex or edge ids, labels), empty on pass.
  std::vector<std::uint64_t> witness;

  bool ok() const { return status == Status::pass; }
};

/// No edge has equal labels at both ends. Missing labels give `incomplete`.
Verdict check_proper_vertex(const Graph& g, std::span<const std::optional<LabelValue>> labels);
Verdict check_proper_vertex(const Graph& g, std::span<const LabelValue> labels);

struct DisjointnessVerdict {
  Verdict verdict;
  /// Joint selections enumerated by the cross-check (0 if skipped).
  std::uint64_t selections_checked = 0;
};

/// Adjacent vertex domains are disjoint. On graphs with at most 8 vertices
/// every joint selection (up to `sweep_budget` of them) is additionally fed
/// to check_proper_vertex, and any disagreement fails the verdict.
DisjointnessVerdict check_domains_disjoint(const Graph& g, const LabelDomain& domains,
                                           std::uint64_t sweep_budget = 1'000'000);

struct DefectVerdict {
  Verdict verdict;
  std::size_t max_defect = 0;
};

/// Largest number of same-labeled neighbors of any vertex.
DefectVerdict check_defective(const Graph& g, std::span<const LabelValue> labels, std::size_t p);
/// Worst case over selections: for every v and x in D(v), the number of
/// neighbors u with x in D(u).
DefectVerdict check_defective(const Graph& g, const LabelDomain& domains, std::size_t p);

/// Edges sharing a label form no cycle, and the out-edges of every vertex
/// (edge e leaves sources[e]) carry distinct labels.
Verdict check_forest_labeling(const Graph& g, std::span<const VertexId> sources, std::span<const std::uint32_t> labels);

struct DecompositionVerdict {
  Verdict verdict;
  /// Largest distance in g between two holders of one label (SIZE_MAX if
  /// some pair is disconnected).
  std::size_t max_weak_diameter = 0;
  std::size_t distinct_labels = 0;
};

/// Every domain has the same size, every pair of holders of a label lies
/// within diameter_bound in g, and at most label_budget distinct labels
/// occur.
DecompositionVerdict check_network_decomposition(const Graph& g, const LabelDomain& domains,
                                                 std::size_t diameter_bound, std::size_t label_budget);

/// No two edges sharing an endpoint have the same color.
Verdict check_edge_proper(const Graph& g, std::span<const std::optional<std::uint64_t>> colors);
Verdict check_edge_proper(const Graph& g, std::span<const std::uint64_t> colors);

/// Edge domains indexed by edge id; adjacent edges must have disjoint
/// domains.
Verdict check_edge_domains_disjoint(const Graph& g, const LabelDomain& domains);

/// Largest number of adjacent edges sharing an edge's color.
DefectVerdict check_edge_defect(const Graph& g, std::span<const std::uint64_t> colors, std::size_t bound);

/// Every edge not in D shares an endpoint with an edge of D.
Verdict check_edge_dominating(const Graph& g, std::span<const EdgeId> d);

/// No two edges of `matching` share an endpoint.
Verdict check_matching(const Graph& g, std::span<const EdgeId> matching);
/// Matching, and every other edge touches a matched vertex.
Verdict check_maximal_matching(const Graph& g, std::span<const EdgeId> matching);

struct MetricsReport {
  std::uint64_t problem_domain_size = 0;
  std::size_t solution_domain_min = 0;
  double solution_domain_median = 0.0;
  std::size_t solution_domain_max = 0;
  /// problem_domain_size / solution_domain_min; empty if some domain is
  /// empty or there are no entities.
  std::optional<double> contingency_factor;
  std::size_t rounds = 0;
};

MetricsReport metrics(const LabelDomain& domains, std::uint64_t declared_palette, std::size_t rounds);

}  // namespace privlabel::verify
