#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "privlabel/decomposition.hpp"
#include "privlabel/params.hpp"

namespace privlabel {

namespace {

// A vertex peels itself once at most `threshold` neighbors remain; the
// announcement lets neighbors update their remaining degree next round.
class Peeling {
 public:
  using Payload = std::uint8_t;
  using Output = std::size_t;
  struct State {
    std::size_t remaining;
    std::size_t layer = 0;
  };

  Peeling(std::size_t threshold, std::size_t cap) : threshold_(threshold), cap_(cap) {}

  State init(sim::NodeContext& ctx) const { return {ctx.neighbors.size()}; }

  bool step(State& s, sim::NodeContext& ctx, std::span<const sim::Message<Payload>> inbox,
            sim::Outbox<Payload>& out) const {
    s.remaining -= inbox.size();
    if (s.remaining <= threshold_) {
      s.layer = ctx.iteration;
      if (s.remaining > 0) out.broadcast(1);
      return true;
    }
    return ctx.iteration >= cap_;
  }

  Output output(const State& s) const { return s.layer; }

 private:
  std::size_t threshold_;
  std::size_t cap_;
};

// Each vertex gives its out-edges distinct forest indices, drawn as a
// uniformly random injection into [F], and tells each target the index.
// Without a supplied orientation the first round exchanges IDs and the
// out-edges are those leading to higher IDs.
class ForestLabeler {
 public:
  using Payload = std::uint32_t;
  using Output = std::vector<std::pair<EdgeId, std::uint32_t>>;
  struct State {
    Output out_labels;
  };

  ForestLabeler(const Orientation* orientation, std::size_t forests)
      : orientation_(orientation), forests_(forests) {}

  State init(sim::NodeContext&) const { return {}; }

  bool step(State& s, sim::NodeContext& ctx, std::span<const sim::Message<Payload>> inbox,
            sim::Outbox<Payload>& out) const {
    const std::size_t label_round = orientation_ ? 1 : 2;
    if (ctx.iteration < label_round) {
      out.broadcast(ctx.id);
      return false;
    }

    std::vector<std::pair<VertexId, EdgeId>> targets;
    if (orientation_) {
      const auto nb = orientation_->out_neighbors(ctx.id);
      const auto eds = orientation_->out_edges(ctx.id);
      for (std::size_t j = 0; j < nb.size(); ++j) targets.emplace_back(nb[j], eds[j]);
    } else {
      for (const auto& m : inbox) {
        if (m.payload <= ctx.id) continue;
        const auto it = std::lower_bound(ctx.neighbors.begin(), ctx.neighbors.end(), m.from);
        targets.emplace_back(m.from, ctx.incident_edges[static_cast<std::size_t>(it - ctx.neighbors.begin())]);
      }
    }
    if (targets.size() > forests_) {
      throw std::logic_error("node " + std::to_string(ctx.id) + " has out-degree " + std::to_string(targets.size()) +
                             " > " + std::to_string(forests_) + " forests");
    }
    std::vector<std::uint32_t> pool(forests_);
    std::iota(pool.begin(), pool.end(), 1u);
    for (std::size_t j = 0; j < targets.size(); ++j) {
      std::swap(pool[j], pool[j + ctx.rng.uniform(forests_ - j)]);
      s.out_labels.emplace_back(targets[j].second, pool[j]);
      out.send(targets[j].first, pool[j]);
    }
    return true;
  }

  Output output(const State& s) const { return s.out_labels; }

 private:
  const Orientation* orientation_;
  std::size_t forests_;
};

class ParentPruning {
 public:
  using Payload = std::vector<LabelValue>;
  using Output = std::vector<LabelValue>;
  struct State {
    std::vector<LabelValue> drawn;
  };

  ParentPruning(const Orientation& orientation, std::size_t k, std::size_t value_range)
      : orientation_(orientation), k_(k), codec_(value_range) {}

  State init(sim::NodeContext& ctx) const {
    State s;
    for (std::size_t i = 0; i < k_; ++i) s.drawn.push_back(codec_.encode(i, ctx.rng.uniform(codec_.stride())));
    return s;
  }

  bool step(State& s, sim::NodeContext& ctx, std::span<const sim::Message<Payload>> inbox,
            sim::Outbox<Payload>& out) const {
    if (ctx.iteration == 1) {
      for (VertexId child : orientation_.in_neighbors(ctx.id)) out.send(child, s.drawn);
      return false;
    }
    for (const auto& m : inbox) {
      for (std::size_t i = 0; i < k_; ++i)
        if (s.drawn[i] == m.payload[i]) s.drawn[i] = kRemoved;
    }
    std::erase(s.drawn, kRemoved);
    return true;
  }

  Output output(const State& s) const { return s.drawn; }

 private:
  static constexpr LabelValue kRemoved = ~LabelValue{0};
  const Orientation& orientation_;
  std::size_t k_;
  LabelCodec codec_;
};

}  // namespace

HPartition h_partition(const Graph& g, std::size_t a, double eps, const sim::RunOptions& opt) {
  if (!(eps > 0.0 && eps <= 2.0)) throw std::invalid_argument("eps must lie in (0, 2]");
  const std::size_t n = g.vertex_count();
  HPartition hp;
  hp.threshold = hpartition_threshold(a, eps);
  hp.layer_cap = hpartition_layer_cap(n, eps);
  const Peeling program(hp.threshold, hp.layer_cap);
  sim::RunOptions run_opt = opt;
  run_opt.max_rounds = std::max(opt.max_rounds, hp.layer_cap + 1);
  auto report = sim::run_sync(program, g, run_opt);
  hp.layer = std::move(report.outputs);
  hp.stats = report.stats;

  std::vector<VertexId> stuck;
  for (VertexId v = 0; v < n; ++v) {
    if (hp.layer[v] == 0) stuck.push_back(v);
    hp.layer_count = std::max(hp.layer_count, hp.layer[v]);
  }
  if (!stuck.empty()) {
    throw ArboricityViolation("arboricity bound a=" + std::to_string(a) + " violated: " +
                                  std::to_string(stuck.size()) + " vertices remain after " +
                                  std::to_string(hp.layer_cap) + " layers, each with more than " +
                                  std::to_string(hp.threshold) + " remaining neighbors",
                              std::move(stuck));
  }

  std::vector<VertexId> source(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    source[e] = hp.layer[ed.v] < hp.layer[ed.u] ? ed.v : ed.u;
  }
  hp.orientation = Orientation(g, std::move(source));
  return hp;
}

ForestDecomposition forest_decomposition(const Graph& g, ForestMode mode, const sim::RunOptions& opt, std::size_t a,
                                         double eps, std::optional<std::size_t> degree_bound) {
  ForestDecomposition fd;
  std::size_t prior_rounds = 0;
  if (mode == ForestMode::id_orientation) {
    fd.forests = degree_bound.value_or(g.max_degree());
    if (fd.forests < g.max_degree()) throw std::invalid_argument("degree bound below the graph's max degree");
    fd.orientation = orient_by_id(g);
  } else {
    fd.partition = h_partition(g, a, eps, opt);
    fd.forests = fd.partition->threshold;
    fd.orientation = fd.partition->orientation;
    prior_rounds = fd.partition->stats.rounds;
    fd.messages_total = fd.partition->stats.messages_total;
  }

  const ForestLabeler program(mode == ForestMode::id_orientation ? nullptr : &fd.orientation, fd.forests);
  auto report = sim::run_sync(program, g, opt);
  fd.rounds = prior_rounds + report.stats.rounds;
  fd.messages_total += report.stats.messages_total;

  fd.edge_labels.assign(g.edge_count(), 0);
  for (VertexId v = 0; v < report.outputs.size(); ++v) {
    for (const auto& [e, label] : report.outputs[v]) {
      if (fd.orientation.source(e) != v) throw std::logic_error("edge labeled by its target");
      fd.edge_labels[e] = label;
    }
  }
  std::vector<LabelValue> all(fd.forests);
  std::iota(all.begin(), all.end(), LabelValue{0});
  fd.domains = LabelDomain(EntityKind::edge, std::vector<std::vector<LabelValue>>(g.edge_count(), all), fd.forests,
                           std::max<std::size_t>(fd.forests, 1));
  return fd;
}

ArboricityColoringResult arboricity_generic_coloring(const Graph& g, std::size_t a, double eps, double c,
                                                     const sim::RunOptions& opt) {
  if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
  ArboricityColoringResult result;
  result.partition = h_partition(g, a, eps, opt);
  result.out_degree_bound = std::max<std::size_t>(1, result.partition.threshold);
  result.k = sample_count(c, g.vertex_count());
  const std::size_t value_range = 2 * result.out_degree_bound;
  const ParentPruning program(result.partition.orientation, result.k, value_range);
  auto report = sim::run_sync(program, g, opt);
  result.rounds = result.partition.stats.rounds + report.stats.rounds;
  result.messages_total = result.partition.stats.messages_total + report.stats.messages_total;
  for (VertexId v = 0; v < report.outputs.size(); ++v)
    if (report.outputs[v].empty()) result.empty.push_back(v);
  result.domains =
      LabelDomain(EntityKind::vertex, std::move(report.outputs), result.k * value_range, value_range);
  return result;
}

}  // namespace privlabel
