#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "privlabel/graph.hpp"
#include "privlabel/labels.hpp"
#include "privlabel/sim/engine.hpp"

namespace privlabel {

struct ClusterId {
  std::uint32_t phase = 0;
  VertexId center = 0;

  friend bool operator==(const ClusterId&, const ClusterId&) = default;
  friend auto operator<=>(const ClusterId&, const ClusterId&) = default;
};

struct Clustering {
  /// Cluster of each vertex; empty if the phase budget ran out first.
  std::vector<std::optional<ClusterId>> cluster;
  std::size_t phase_count = 0;
  std::size_t radius_cap = 0;
  sim::RunStats stats;

  bool failed() const;
  std::size_t cluster_count() const;
};

/// One Linial-Saks execution. Per phase each unclustered vertex draws
/// r = min(B, Geometric(1/2)) and floods (r, ID) for B rounds through all
/// vertices; a vertex joins the cluster of the largest (r, ID) reaching it
/// if its distance to that center is < r. Phase budget 8 log2 n.
Clustering linial_saks(const Graph& g, const sim::RunOptions& opt, std::optional<std::size_t> radius_cap = std::nullopt);

struct NetworkDecomposition {
  /// Domain of v: {<i, C_i(v)> : 0 <= i < c}, cluster ids renumbered densely
  /// per execution in (phase, center) order.
  LabelDomain domains;
  std::vector<Clustering> executions;
  std::size_t c = 0;
  std::size_t radius_cap = 0;
  /// Max over executions (they run side by side).
  std::size_t rounds = 0;
  std::uint64_t messages_total = 0;

  bool failed() const;
};

/// c independent Linial-Saks executions with seeds derived from opt.seed.
/// Throws std::invalid_argument for c < 2.
NetworkDecomposition generic_network_decomposition(const Graph& g, std::size_t c, const sim::RunOptions& opt,
                                                   std::optional<std::size_t> radius_cap = std::nullopt);

/// Raised when peeling cannot finish within the layer cap.
class ArboricityViolation : public std::runtime_error {
 public:
  ArboricityViolation(const std::string& what, std::vector<VertexId> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  /// Vertices left unpeeled; every one has more than (2+eps)a neighbors
  /// inside this set.
  const std::vector<VertexId>& witness() const { return witness_; }

 private:
  std::vector<VertexId> witness_;
};

struct HPartition {
  /// Layer of each vertex, 1-based.
  std::vector<std::size_t> layer;
  std::size_t layer_count = 0;
  std::size_t layer_cap = 0;
  std::size_t threshold = 0;
  /// Edges point to the higher layer, ties to the higher ID.
  Orientation orientation;
  sim::RunStats stats;
};

/// Iterated peeling: layer i takes every remaining vertex with at most
/// floor((2+eps)a) remaining neighbors, one layer per round.
HPartition h_partition(const Graph& g, std::size_t a, double eps, const sim::RunOptions& opt);

enum class ForestMode { id_orientation, h_partition };

struct ForestDecomposition {
  /// Forest index of each edge, 1-based.
  std::vector<std::uint32_t> edge_labels;
  std::size_t forests = 0;
  Orientation orientation;
  /// Edge view: every edge may take any of the F forest indices
  /// (encoded 0..F-1).
  LabelDomain domains;
  std::size_t rounds = 0;
  std::uint64_t messages_total = 0;
  std::optional<HPartition> partition;
};

/// Orients the graph (by ID, or by an H-partition) and lets every vertex
/// assign its out-edges distinct forest indices drawn uniformly at random
/// from [F]; F = Delta for ID mode, floor((2+eps)a) otherwise.
ForestDecomposition forest_decomposition(const Graph& g, ForestMode mode, const sim::RunOptions& opt,
                                         std::size_t a = 0, double eps = 1.0,
                                         std::optional<std::size_t> degree_bound = std::nullopt);

struct ArboricityColoringResult {
  LabelDomain domains;
  HPartition partition;
  std::size_t k = 0;
  /// A = floor((2+eps)a); tuples are drawn from [2A].
  std::size_t out_degree_bound = 0;
  std::size_t rounds = 0;
  std::uint64_t messages_total = 0;
  std::vector<VertexId> empty;
  bool failed() const { return !empty.empty(); }
};

/// Orients by H-partition, draws k = ceil(c log2 n) tuples from [2A] per
/// vertex, and lets each vertex drop the tuples its parents drew.
ArboricityColoringResult arboricity_generic_coloring(const Graph& g, std::size_t a, double eps, double c,
                                                     const sim::RunOptions& opt);

}  // namespace privlabel
