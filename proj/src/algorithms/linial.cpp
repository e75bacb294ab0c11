#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "privlabel/coloring.hpp"

namespace privlabel {

namespace {

/// x^k, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t x, unsigned k) {
  unsigned __int128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= x;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

/// Smallest r with r^k >= n.
std::uint64_t ceil_root(std::uint64_t n, unsigned k) {
  if (n <= 1) return n;
  auto r = static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(n), 1.0 / k)));
  while (saturating_pow(r, k) < n) ++r;
  while (r > 1 && saturating_pow(r - 1, k) >= n) --r;
  return r;
}

struct LinialOutput {
  Color color = 0;
  std::vector<LabelValue> domain;
};

// Iteration 1 announces the starting color; iteration 1 + j applies
// reduction step j to the colors received; if a final family is set, the
// iteration after the last step computes the residual domain with
// multiplicity threshold rho and halts.
class LinialPipeline {
 public:
  using Payload = Color;
  using Output = LinialOutput;
  struct State {
    Color color;
    std::vector<LabelValue> domain;
  };

  LinialPipeline(std::span<const Color> start, std::vector<PolyFamily> steps, std::optional<PolyFamily> final_family,
                 std::uint64_t rho)
      : start_(start), steps_(std::move(steps)), final_(std::move(final_family)), rho_(rho) {}

  State init(sim::NodeContext& ctx) const { return {start_[ctx.id], {}}; }

  bool step(State& s, sim::NodeContext& ctx, std::span<const sim::Message<Color>> inbox,
            sim::Outbox<Color>& out) const {
    const std::size_t t = ctx.iteration;
    if (t >= 2) {
      const std::size_t j = t - 2;
      for (const auto& m : inbox) {
        if (m.payload == s.color) {
          throw std::runtime_error("improper coloring: nodes " + std::to_string(ctx.id) + " and " +
                                   std::to_string(m.from) + " share color " + std::to_string(s.color));
        }
      }
      if (j < steps_.size()) {
        s.color = reduce(steps_[j], s.color, inbox, ctx.id);
      } else {
        s.domain = residual(*final_, s.color, inbox);
        return true;
      }
    }
    const bool more = t - 1 < steps_.size() || (t - 1 == steps_.size() && final_);
    if (!more) return true;
    out.broadcast(s.color);
    return false;
  }

  Output output(const State& s) const { return {s.color, s.domain}; }

 private:
  static std::vector<std::uint64_t> points(const PolyFamily& fam, Color x) {
    std::vector<std::uint64_t> ys(fam.prime());
    for (std::uint64_t a = 0; a < fam.prime(); ++a) ys[a] = fam.evaluate(x, a);
    return ys;
  }

  static Color reduce(const PolyFamily& fam, Color x, std::span<const sim::Message<Color>> inbox, VertexId id) {
    const std::uint64_t q = fam.prime();
    std::vector<char> covered(q, 0);
    const auto mine = points(fam, x);
    for (const auto& m : inbox) {
      const auto theirs = points(fam, m.payload);
      for (std::uint64_t a = 0; a < q; ++a) covered[a] |= theirs[a] == mine[a];
    }
    for (std::uint64_t a = 0; a < q; ++a) {
      if (!covered[a]) return a * q + mine[a];
    }
    throw std::runtime_error("node " + std::to_string(id) + ": every element of its set is covered");
  }

  std::vector<LabelValue> residual(const PolyFamily& fam, Color x, std::span<const sim::Message<Color>> inbox) const {
    const std::uint64_t q = fam.prime();
    std::vector<std::uint64_t> hits(q, 0);
    const auto mine = points(fam, x);
    for (const auto& m : inbox) {
      const auto theirs = points(fam, m.payload);
      for (std::uint64_t a = 0; a < q; ++a) hits[a] += theirs[a] == mine[a];
    }
    std::vector<LabelValue> keep;
    for (std::uint64_t a = 0; a < q; ++a)
      if (hits[a] <= rho_) keep.push_back(a * q + mine[a]);
    return keep;
  }

  std::span<const Color> start_;
  std::vector<PolyFamily> steps_;
  std::optional<PolyFamily> final_;
  std::uint64_t rho_;
};

std::vector<PolyFamily> families(const std::vector<LinialStep>& schedule) {
  std::vector<PolyFamily> out;
  for (const auto& s : schedule) out.emplace_back(s.d, s.q);
  return out;
}

std::vector<Color> id_colors(std::size_t n) {
  std::vector<Color> ids(n);
  for (std::size_t v = 0; v < n; ++v) ids[v] = v;
  return ids;
}

std::size_t checked_degree_bound(const Graph& g, std::optional<std::size_t> degree_bound) {
  const std::size_t delta = degree_bound.value_or(g.max_degree());
  if (delta < g.max_degree()) throw std::invalid_argument("degree bound below the graph's max degree");
  return delta;
}

}  // namespace

std::vector<LinialStep> linial_schedule(std::uint64_t palette, std::uint64_t delta, std::uint64_t target) {
  const std::uint64_t dp = std::max<std::uint64_t>(delta, 1);
  std::vector<LinialStep> schedule;
  std::uint64_t n = palette;
  while (n > target) {
    std::optional<LinialStep> best;
    for (std::uint64_t d = 1; d <= 3; ++d) {
      const std::uint64_t q = smallest_prime_geq(std::max(d * (dp + 1) + 1, ceil_root(n, static_cast<unsigned>(d + 1))));
      if (saturating_pow(q, static_cast<unsigned>(d + 1)) == std::numeric_limits<std::uint64_t>::max()) continue;
      if (!best || q < best->q) best = LinialStep{d, q};
    }
    if (!best || best->q * best->q >= n) break;
    schedule.push_back(*best);
    n = best->q * best->q;
  }
  return schedule;
}

ColoringRun linial_reduce_round(const Graph& g, std::span<const Color> current, const PolyFamily& fam,
                                const sim::RunOptions& opt, std::optional<std::size_t> degree_bound) {
  const std::size_t delta = checked_degree_bound(g, degree_bound);
  if (current.size() != g.vertex_count()) throw std::invalid_argument("coloring size does not match the graph");
  for (Color x : current) {
    if (x >= fam.family_size()) {
      throw std::invalid_argument("color " + std::to_string(x) + " exceeds family size " +
                                  std::to_string(fam.family_size()));
    }
  }
  if (fam.cover_free_degree() < delta) {
    throw std::invalid_argument("family is only " + std::to_string(fam.cover_free_degree()) +
                                "-cover-free; degree bound is " + std::to_string(delta));
  }
  const LinialPipeline program(current, {fam}, std::nullopt, 0);
  auto report = sim::run_sync(program, g, opt, delta);
  ColoringRun run;
  run.stats = report.stats;
  run.colors.reserve(report.outputs.size());
  for (const auto& o : report.outputs) run.colors.push_back(o.color);
  return run;
}

Delta2Result generic_delta2_coloring(const Graph& g, const sim::RunOptions& opt,
                                     std::optional<std::size_t> degree_bound) {
  const std::size_t delta = checked_degree_bound(g, degree_bound);
  const std::uint64_t dp = std::max<std::uint64_t>(delta, 1);
  Delta2Result result;
  result.q_final = smallest_prime_geq(std::max<std::uint64_t>(3 * dp, 2));
  const std::uint64_t target = saturating_pow(result.q_final, 3);
  result.schedule = linial_schedule(g.vertex_count(), dp, target);
  const std::uint64_t handoff = result.schedule.empty() ? g.vertex_count() : result.schedule.back().q * result.schedule.back().q;
  if (handoff > target) throw std::logic_error("Linial schedule stalled above q_f^3");

  const auto ids = id_colors(g.vertex_count());
  const LinialPipeline program(ids, families(result.schedule), PolyFamily(2, result.q_final), 0);
  auto report = sim::run_sync(program, g, opt, delta);
  std::vector<std::vector<LabelValue>> domains;
  domains.reserve(report.outputs.size());
  for (auto& o : report.outputs) domains.push_back(std::move(o.domain));
  result.stats = report.stats;
  result.domains = LabelDomain(EntityKind::vertex, std::move(domains), result.q_final * result.q_final, result.q_final);
  return result;
}

DefectiveResult generic_defective_coloring(const Graph& g, std::uint64_t p, const sim::RunOptions& opt,
                                           std::optional<std::size_t> degree_bound) {
  const std::size_t delta = checked_degree_bound(g, degree_bound);
  const std::uint64_t dp = std::max<std::uint64_t>(delta, 1);
  if (p < 1 || p > dp) {
    throw std::invalid_argument("defect p=" + std::to_string(p) + " outside [1, " + std::to_string(dp) + "]");
  }
  DefectiveResult result;
  result.p = p;
  const std::uint64_t q_base = std::max<std::uint64_t>((3 * dp + p) / (p + 1), 2);
  result.schedule = linial_schedule(g.vertex_count(), dp, saturating_pow(q_base, 3));
  result.handoff_palette =
      result.schedule.empty() ? g.vertex_count() : result.schedule.back().q * result.schedule.back().q;
  result.q_final = smallest_prime_geq(std::max(q_base, ceil_root(result.handoff_palette, 3)));
  const std::uint64_t blocked = 2 * dp / (p + 1);
  result.domain_floor = result.q_final > blocked ? result.q_final - blocked : 0;

  const auto ids = id_colors(g.vertex_count());
  const LinialPipeline program(ids, families(result.schedule), PolyFamily(2, result.q_final), p);
  auto report = sim::run_sync(program, g, opt, delta);
  std::vector<std::vector<LabelValue>> domains;
  domains.reserve(report.outputs.size());
  for (auto& o : report.outputs) domains.push_back(std::move(o.domain));
  result.stats = report.stats;
  result.domains = LabelDomain(EntityKind::vertex, std::move(domains), result.q_final * result.q_final, result.q_final);
  return result;
}

}  // namespace privlabel
