#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "privlabel/edge_coloring.hpp"

namespace privlabel {

namespace {

LabelDomain as_edge_domain(const LabelDomain& d) {
  return LabelDomain(EntityKind::edge, d.domains(), d.problem_domain_size(), d.stride());
}

class KuhnNumbering {
 public:
  using Payload = std::uint32_t;
  using Output = std::vector<std::pair<EdgeId, std::uint64_t>>;
  struct State {
    std::vector<std::uint32_t> number;  // aligned with ctx.neighbors
    Output colors;
  };

  KuhnNumbering(std::uint64_t multiplicity, std::uint64_t numbers) : i_(multiplicity), numbers_(numbers) {}

  State init(sim::NodeContext&) const { return {}; }

  bool step(State& s, sim::NodeContext& ctx, std::span<const sim::Message<Payload>> inbox,
            sim::Outbox<Payload>& out) const {
    const std::size_t deg = ctx.neighbors.size();
    if (ctx.iteration == 1) {
      // Edges take distinct random slots among numbers * i, so a vertex of
      // small degree can still reach every number.
      std::vector<std::uint32_t> slots(numbers_ * i_);
      std::iota(slots.begin(), slots.end(), 0u);
      s.number.assign(deg, 0);
      for (std::size_t j = 0; j < deg; ++j) {
        std::swap(slots[j], slots[j + ctx.rng.uniform(slots.size() - j)]);
        s.number[j] = static_cast<std::uint32_t>(slots[j] / i_ + 1);
      }
      for (std::size_t j = 0; j < deg; ++j) out.send(ctx.neighbors[j], s.number[j]);
      return false;
    }
    for (const auto& m : inbox) {
      const auto j = static_cast<std::size_t>(std::lower_bound(ctx.neighbors.begin(), ctx.neighbors.end(), m.from) -
                                              ctx.neighbors.begin());
      const std::uint64_t a = std::min<std::uint64_t>(s.number[j], m.payload);
      const std::uint64_t b = std::max<std::uint64_t>(s.number[j], m.payload);
      s.colors.emplace_back(ctx.incident_edges[j], kuhn_color_index(a, b, numbers_));
    }
    return true;
  }

  Output output(const State& s) const { return s.colors; }

 private:
  std::uint64_t i_;
  std::uint64_t numbers_;
};

struct EdgeMessage {
  bool final;
  std::uint64_t color;
};

class ProposalColoring {
 public:
  using Payload = EdgeMessage;
  using Output = std::optional<std::uint64_t>;
  struct State {
    std::uint64_t proposal = 0;
    std::optional<std::uint64_t> color;
    std::vector<char> taken;
  };

  explicit ProposalColoring(std::uint64_t palette) : palette_(palette) {}

  State init(sim::NodeContext&) const {
    State s;
    s.taken.assign(palette_, 0);
    return s;
  }

  bool step(State& s, sim::NodeContext& ctx, std::span<const sim::Message<Payload>> inbox,
            sim::Outbox<Payload>& out) const {
    if (ctx.iteration > 1) {
      bool clash = false;
      for (const auto& m : inbox) {
        if (m.payload.color == s.proposal) clash = true;
        if (m.payload.final) s.taken[m.payload.color] = 1;
      }
      if (!clash) {
        s.color = s.proposal;
        out.broadcast({true, s.proposal});
        return true;
      }
    }
    std::vector<std::uint64_t> free;
    for (std::uint64_t x = 0; x < palette_; ++x)
      if (!s.taken[x]) free.push_back(x);
    s.proposal = free[ctx.rng.uniform(free.size())];
    out.broadcast({false, s.proposal});
    return false;
  }

  Output output(const State& s) const { return s.color; }

 private:
  std::uint64_t palette_;
};

struct MatchMessage {
  bool joined;
  std::uint64_t priority;
};

// Two iterations per cycle: odd ones draw and announce priorities, even
// ones let local maxima join and announce it; an edge hearing a join at the
// next odd iteration drops out.
class LubyMatching {
 public:
  using Payload = MatchMessage;
  struct Output {
    bool joined = false;
    bool decided = false;
  };
  struct State {
    std::uint64_t priority = 0;
    Output result;
  };

  State init(sim::NodeContext&) const { return {}; }

  bool step(State& s, sim::NodeContext& ctx, std::span<const sim::Message<Payload>> inbox,
            sim::Outbox<Payload>& out) const {
    if (ctx.iteration % 2 == 1) {
      for (const auto& m : inbox) {
        if (m.payload.joined) {
          s.result.decided = true;
          return true;
        }
      }
      s.priority = ctx.rng.next();
      out.broadcast({false, s.priority});
      return false;
    }
    for (const auto& m : inbox) {
      if (m.payload.joined) continue;
      if (m.payload.priority > s.priority || (m.payload.priority == s.priority && m.from > ctx.id)) return false;
    }
    s.result = {true, true};
    out.broadcast({true, 0});
    return true;
  }

  Output output(const State& s) const { return s.result; }
};

std::size_t line_bound(const Graph& g) { return g.max_degree() == 0 ? 0 : 2 * g.max_degree() - 1; }

}  // namespace

std::uint64_t ceil_sqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r < x) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= x) --r;
  return r;
}

std::uint64_t kuhn_palette_size(std::uint64_t numbers) { return numbers * (numbers + 1) / 2; }

std::uint64_t kuhn_color_index(std::uint64_t a, std::uint64_t b, std::uint64_t numbers) {
  if (a < 1 || a > b || b > numbers) throw std::invalid_argument("invalid Kuhn pair");
  return (a - 1) * (numbers + 1) - (a - 1) * a / 2 + (b - a);
}

std::pair<std::uint64_t, std::uint64_t> kuhn_color_pair(std::uint64_t index, std::uint64_t numbers) {
  for (std::uint64_t a = 1; a <= numbers; ++a) {
    const std::uint64_t row = numbers - a + 1;
    if (index < row) return {a, a + index};
    index -= row;
  }
  throw std::out_of_range("Kuhn color index outside the palette");
}

LineGraphColoring edge_coloring_via_line_graph(const Graph& g, LineGraphVariant variant, const sim::RunOptions& opt,
                                               double c) {
  const LineGraph lg = line_graph(g);
  LineGraphColoring result;
  result.line_degree_bound = line_bound(g);
  if (variant == LineGraphVariant::random) {
    auto run = generic_random_coloring(lg.graph, c, opt, result.line_degree_bound);
    result.domains = as_edge_domain(run.domains);
    result.stats = run.stats;
    result.parameter = run.k;
    result.empty.assign(run.empty.begin(), run.empty.end());
  } else {
    auto run = generic_delta2_coloring(lg.graph, opt, result.line_degree_bound);
    result.domains = as_edge_domain(run.domains);
    result.stats = run.stats;
    result.parameter = run.q_final;
    for (EdgeId e = 0; e < result.domains.size(); ++e)
      if (result.domains.domain(e).empty()) result.empty.push_back(e);
  }
  return result;
}

KuhnColoring kuhn_defective_edge_coloring(const Graph& g, std::uint64_t i, const sim::RunOptions& opt,
                                          std::optional<std::size_t> degree_bound) {
  const std::size_t delta = degree_bound.value_or(g.max_degree());
  if (delta < g.max_degree()) throw std::invalid_argument("degree bound below the graph's max degree");
  const std::uint64_t dp = std::max<std::uint64_t>(delta, 1);
  if (i < 1 || i > dp) throw std::invalid_argument("multiplicity i=" + std::to_string(i) + " outside [1, Delta]");
  KuhnColoring result;
  result.multiplicity = i;
  result.numbers = (dp + i - 1) / i;
  result.palette = kuhn_palette_size(result.numbers);
  const KuhnNumbering program(i, result.numbers);
  auto report = sim::run_sync(program, g, opt, delta);
  result.stats = report.stats;
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  result.colors.assign(g.edge_count(), kUnset);
  for (const auto& per_vertex : report.outputs) {
    for (const auto& [e, color] : per_vertex) {
      if (result.colors[e] != kUnset && result.colors[e] != color) {
        throw std::logic_error("endpoints disagree on the color of edge " + std::to_string(e));
      }
      result.colors[e] = color;
    }
  }
  return result;
}

EdgeColoringRun simple_edge_coloring(const Graph& g, std::uint64_t palette, const sim::RunOptions& opt) {
  if (palette < std::max<std::uint64_t>(line_bound(g), 1)) {
    throw std::invalid_argument("palette " + std::to_string(palette) + " below 2 Delta - 1");
  }
  const LineGraph lg = line_graph(g);
  const ProposalColoring program(palette);
  auto report = sim::run_sync(program, lg.graph, opt);
  return {std::move(report.outputs), report.stats};
}

MatchingRun maximal_matching(const Graph& g, const sim::RunOptions& opt) {
  const LineGraph lg = line_graph(g);
  auto report = sim::run_sync(LubyMatching{}, lg.graph, opt);
  MatchingRun result;
  result.stats = report.stats;
  for (EdgeId e = 0; e < report.outputs.size(); ++e) {
    if (report.outputs[e].joined) result.matching.push_back(e);
    if (!report.outputs[e].decided) result.complete = false;
  }
  return result;
}

DominatingColoredSet dominating_edge_coloring(const Graph& g, std::uint64_t c, std::uint64_t t,
                                              const sim::RunOptions& opt) {
  const std::uint64_t delta = g.max_degree();
  if (delta < 1) throw std::invalid_argument("dominating edge coloring needs Delta >= 1");
  if (c < 2) throw std::invalid_argument("c must be >= 2");
  if (t < 2) throw std::invalid_argument("t must be >= 2");
  DominatingColoredSet out;
  out.t = t;
  out.base_palette = c * delta;
  out.classes = ceil_sqrt(delta);
  out.class_width = (out.base_palette + out.classes - 1) / out.classes;

  const auto base = simple_edge_coloring(g, out.base_palette, opt);
  out.coloring_rounds = base.stats.rounds;
  out.complete = base.stats.complete;
  const std::size_t m = g.edge_count();
  out.base_colors.assign(m, 0);
  out.class_of.assign(m, 0);
  std::vector<std::vector<EdgeId>> members(out.classes);
  for (EdgeId e = 0; e < m; ++e) {
    if (!base.colors[e]) continue;
    out.base_colors[e] = *base.colors[e];
    out.class_of[e] = static_cast<std::uint32_t>(*base.colors[e] / out.class_width + 1);
    members[out.class_of[e] - 1].push_back(e);
  }

  out.in_d.assign(m, 0);
  for (std::uint64_t cls = 0; cls < out.classes; ++cls) {
    std::vector<Edge> edges;
    for (EdgeId e : members[cls]) edges.push_back(g.edge(e));
    // Canonical order is preserved, so subgraph edge j is members[cls][j].
    const Graph sub = Graph::from_edges(g.vertex_count(), edges);
    sim::RunOptions sub_opt = opt;
    sub_opt.seed = derive_seed(opt.seed, cls + 1);
    const auto matching = maximal_matching(sub, sub_opt);
    out.matching_rounds = std::max(out.matching_rounds, matching.stats.rounds);
    out.complete = out.complete && matching.complete && matching.stats.complete;
    for (EdgeId j : matching.matching) out.in_d[members[cls][j]] = 1;
  }

  std::vector<std::vector<LabelValue>> domains;
  for (EdgeId e = 0; e < m; ++e) {
    if (!out.in_d[e]) continue;
    out.d_edges.push_back(e);
    std::vector<LabelValue> d(t);
    std::iota(d.begin(), d.end(), LabelValue{(out.class_of[e] - 1) * t});
    domains.push_back(std::move(d));
  }
  out.domains = LabelDomain(EntityKind::edge, std::move(domains), t * out.classes, t);
  return out;
}

}  // namespace privlabel
