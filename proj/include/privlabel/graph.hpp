#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace privlabel {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Unordered edge in canonical form (u < v).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with dense vertex IDs 0..n-1.
///
/// Edges are stored canonically (u < v), sorted lexicographically; the
/// position in that order is the edge index. Adjacency lists are sorted by
/// neighbor ID and carry the matching edge index alongside. Immutable after
/// construction.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary edge list. Endpoint order is
  /// irrelevant and duplicates collapse. Throws std::invalid_argument on
  /// self-loops or endpoints >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  /// Edge indices aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const { return max_degree_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  /// Vertex of edge e that is not `endpoint`.
  VertexId other_endpoint(EdgeId e, VertexId endpoint) const {
    const Edge& ed = edges_[e];
    return ed.u == endpoint ? ed.v : ed.u;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::vector<EdgeId> incident_;
  std::vector<Edge> edges_;
  std::size_t max_degree_ = 0;
};

/// Per-edge orientation of a Graph. `source(e)` is the tail of edge e.
///
/// The acyclic flag is a certificate computed at construction by Kahn's
/// topological sort; it is never trusted from the caller.
class Orientation {
 public:
  Orientation() = default;
  Orientation(const Graph& g, std::vector<VertexId> source_of_edge);

  std::size_t vertex_count() const { return out_offsets_.empty() ? 0 : out_offsets_.size() - 1; }
  std::size_t edge_count() const { return source_.size(); }

  VertexId source(EdgeId e) const { return source_[e]; }
  VertexId target(EdgeId e) const { return target_[e]; }
  std::span<const VertexId> sources() const { return source_; }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    return {out_.data() + out_offsets_[v], out_.data() + out_offsets_[v + 1]};
  }
  std::span<const EdgeId> out_edges(VertexId v) const {
    return {out_edges_.data() + out_offsets_[v], out_edges_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in_neighbors(VertexId v) const {
    return {in_.data() + in_offsets_[v], in_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t max_out_degree() const;
  bool acyclic() const { return acyclic_; }

 private:
  std::vector<VertexId> source_;
  std::vector<VertexId> target_;
  std::vector<std::size_t> out_offsets_;
  std::vector<VertexId> out_;
  std::vector<EdgeId> out_edges_;
  std::vector<std::size_t> in_offsets_;
  std::vector<VertexId> in_;
  bool acyclic_ = true;
};

/// Every edge directed from the lower ID to the higher ID.
Orientation orient_by_id(const Graph& g);

/// Orients each tree of a forest towards its minimum-ID vertex, so every
/// vertex has out-degree <= 1 (the out-neighbor is its parent). Throws
/// std::invalid_argument if g contains a cycle.
Orientation orient_forest(const Graph& g);

struct LineGraph {
  Graph graph;
  /// vertex_of_edge[e] is the line-graph vertex representing edge e of the
  /// source graph. The construction uses the identity map.
  std::vector<VertexId> vertex_of_edge;
};

LineGraph line_graph(const Graph& g);

/// Parses the plain-text edge-list format: optional "p <n> <m>" header,
/// one "u v" pair per line, lines starting with '#' or '%' are comments.
/// Throws std::invalid_argument naming the offending line.
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// Header plus canonical edges, one per line.
std::string to_edge_list(const Graph& g);

}  // namespace privlabel
