#include <algorithm>
#include <stdexcept>

#include "privlabel/coloring.hpp"
#include "privlabel/params.hpp"

namespace privlabel {

namespace {

// Tuples are kept as encoded labels i * value_range + x_i, so tuple
// equality is label equality.
class RandomColoring {
 public:
  using Payload = std::vector<LabelValue>;
  using Output = std::vector<LabelValue>;
  struct State {
    std::vector<LabelValue> drawn;
  };

  RandomColoring(std::size_t k, std::size_t value_range) : k_(k), codec_(value_range) {}

  State init(sim::NodeContext& ctx) const {
    State s;
    s.drawn.reserve(k_);
    for (std::size_t i = 0; i < k_; ++i) s.drawn.push_back(codec_.encode(i, ctx.rng.uniform(codec_.stride())));
    return s;
  }

  bool step(State& s, sim::NodeContext& ctx, std::span<const sim::Message<Payload>> inbox,
            sim::Outbox<Payload>& out) const {
    if (ctx.iteration == 1) {
      if (!ctx.neighbors.empty()) out.broadcast(s.drawn);
      return false;
    }
    // Tuple i of a neighbor can only collide with our tuple i.
    for (const auto& m : inbox) {
      for (std::size_t i = 0; i < k_; ++i) {
        if (s.drawn[i] != kRemoved && m.payload[i] == s.drawn[i]) s.drawn[i] = kRemoved;
      }
    }
    std::erase(s.drawn, kRemoved);
    return true;
  }

  Output output(const State& s) const { return s.drawn; }

 private:
  static constexpr LabelValue kRemoved = ~LabelValue{0};
  std::size_t k_;
  LabelCodec codec_;
};

}  // namespace

RandomColoringResult generic_random_coloring(const Graph& g, double c, const sim::RunOptions& opt,
                                             std::optional<std::size_t> degree_bound) {
  if (!(c > 0.0)) throw std::invalid_argument("generic_random_coloring: c must be positive");
  const std::size_t delta = std::max<std::size_t>(1, degree_bound.value_or(g.max_degree()));
  if (delta < g.max_degree()) throw std::invalid_argument("degree bound below the graph's max degree");
  RandomColoringResult result;
  result.k = sample_count(c, g.vertex_count());
  result.value_range = 2 * delta;
  const RandomColoring program(result.k, result.value_range);
  auto report = sim::run_sync(program, g, opt, delta);
  for (VertexId v = 0; v < report.outputs.size(); ++v) {
    if (report.outputs[v].empty()) result.empty.push_back(v);
  }
  result.stats = report.stats;
  result.domains = LabelDomain(EntityKind::vertex, std::move(report.outputs), result.k * result.value_range,
                               result.value_range);
  return result;
}

}  // namespace privlabel
