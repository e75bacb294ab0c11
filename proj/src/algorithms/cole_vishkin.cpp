#include <bit>
#include <stdexcept>
#include <string>

#include "privlabel/coloring.hpp"

namespace privlabel {

namespace {

std::uint64_t bits_for(std::uint64_t palette) {
  return std::max<std::uint64_t>(1, std::bit_width(palette == 0 ? 0 : palette - 1));
}

// Every iteration broadcasts the current color. Iteration 1 announces the
// ID; iterations 2..T+1 are bit reductions against the parent's color; then
// each color X in {5, 4, 3} takes a shift-down iteration and a recolor
// iteration.
class ColeVishkin {
 public:
  using Payload = Color;
  using Output = Color;
  struct State {
    Color color;
    std::optional<VertexId> parent;
  };

  ColeVishkin(const std::vector<std::optional<VertexId>>& parent, std::size_t steps)
      : parent_(parent), steps_(steps) {}

  State init(sim::NodeContext& ctx) const { return {ctx.id, parent_[ctx.id]}; }

  bool step(State& s, sim::NodeContext& ctx, std::span<const sim::Message<Color>> inbox,
            sim::Outbox<Color>& out) const {
    const std::size_t t = ctx.iteration;
    if (t == 1) {
      out.broadcast(s.color);
      return false;
    }
    const auto parent_color = [&]() -> std::optional<Color> {
      if (!s.parent) return std::nullopt;
      for (const auto& m : inbox)
        if (m.from == *s.parent) return m.payload;
      throw std::logic_error("parent color missing at node " + std::to_string(ctx.id));
    };

    if (t <= steps_ + 1) {
      const auto pc = parent_color();
      std::uint64_t i = 0;
      if (pc) {
        const Color diff = s.color ^ *pc;
        if (diff == 0) throw std::runtime_error("Cole-Vishkin: node and parent share a color");
        i = static_cast<std::uint64_t>(std::countr_zero(diff));
      }
      s.color = 2 * i + ((s.color >> i) & 1);
      out.broadcast(s.color);
      return false;
    }

    const std::size_t phase = t - steps_ - 2;  // 0..5
    const Color target = 5 - phase / 2;
    if (phase % 2 == 0) {
      // Shift down: take the parent's color; roots move off their own.
      if (const auto pc = parent_color()) {
        s.color = *pc;
      } else {
        s.color = s.color == 0 ? 1 : 0;
      }
      out.broadcast(s.color);
      return false;
    }
    if (s.color == target) {
      bool used[3] = {false, false, false};
      for (const auto& m : inbox)
        if (m.payload < 3) used[m.payload] = true;
      Color pick = 0;
      while (used[pick]) ++pick;
      s.color = pick;
    }
    if (target == 3) return true;
    out.broadcast(s.color);
    return false;
  }

  Color output(const State& s) const { return s.color; }

 private:
  const std::vector<std::optional<VertexId>>& parent_;
  std::size_t steps_;
};

}  // namespace

std::size_t cole_vishkin_steps(std::size_t n) {
  std::uint64_t palette = n;
  std::size_t steps = 0;
  while (palette > 6) {
    palette = 2 * bits_for(palette);
    ++steps;
  }
  return steps;
}

ColoringRun cole_vishkin_3coloring(const Graph& g, const Orientation& forest, const sim::RunOptions& opt) {
  const std::size_t n = g.vertex_count();
  if (forest.vertex_count() != n || forest.edge_count() != g.edge_count()) {
    throw std::invalid_argument("orientation does not match the graph");
  }
  if (!forest.acyclic()) throw std::invalid_argument("orientation is cyclic");
  std::vector<std::optional<VertexId>> parent(n);
  for (VertexId v = 0; v < n; ++v) {
    const auto out = forest.out_neighbors(v);
    if (out.size() > 1) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has out-degree " + std::to_string(out.size()) +
                                  "; not an oriented forest");
    }
    if (!out.empty()) parent[v] = out.front();
  }
  const ColeVishkin program(parent, cole_vishkin_steps(n));
  auto report = sim::run_sync(program, g, opt);
  return {std::move(report.outputs), report.stats};
}

LabelDomain expand_to_generic(std::span<const Color> coloring, std::size_t delta) {
  if (delta == 0) throw std::invalid_argument("expand_to_generic: delta must be positive");
  const LabelCodec codec(3);
  std::vector<std::vector<LabelValue>> domains(coloring.size());
  for (std::size_t v = 0; v < coloring.size(); ++v) {
    if (coloring[v] >= 3) throw std::invalid_argument("expand_to_generic: color outside {0,1,2}");
    domains[v].reserve(delta);
    for (std::size_t i = 0; i < delta; ++i) domains[v].push_back(codec.encode(i, coloring[v]));
  }
  return LabelDomain(EntityKind::vertex, std::move(domains), 3 * delta, 3);
}

}  // namespace privlabel
