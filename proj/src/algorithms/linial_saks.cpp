#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "privlabel/decomposition.hpp"
#include "privlabel/params.hpp"

namespace privlabel {

namespace {

struct Token {
  std::uint32_t r;
  VertexId id;
  /// Hops the token may still travel.
  std::uint32_t h;

  std::uint64_t key() const { return (std::uint64_t{r} << 32) | id; }
};

// Tokens a vertex has heard this phase, reduced to the Pareto front over
// (key, remaining hops): a token beaten on both coordinates can never win
// at this vertex or further downstream.
struct Front {
  struct Entry {
    Token token;
    bool fresh;
  };
  std::vector<Entry> entries;

  void insert(Token t) {
    for (const auto& e : entries) {
      if (e.token.key() >= t.key() && e.token.h >= t.h) return;
    }
    std::erase_if(entries, [&](const Entry& e) { return e.token.key() <= t.key() && e.token.h <= t.h; });
    entries.push_back({t, true});
  }

  std::optional<Token> best() const {
    std::optional<Token> top;
    for (const auto& e : entries)
      if (!top || e.token.key() > top->key() || (e.token.key() == top->key() && e.token.h > top->h)) top = e.token;
    return top;
  }
};

class LinialSaks {
 public:
  using Payload = std::vector<Token>;
  using Output = std::optional<ClusterId>;
  struct State {
    std::optional<ClusterId> cluster;
    Front front;
    bool failed = false;
  };

  LinialSaks(std::size_t radius_cap, std::size_t phase_budget) : cap_(radius_cap), budget_(phase_budget) {}

  State init(sim::NodeContext&) const { return {}; }

  bool step(State& s, sim::NodeContext& ctx, std::span<const sim::Message<Payload>> inbox,
            sim::Outbox<Payload>& out) const {
    for (const auto& m : inbox)
      for (Token t : m.payload) s.front.insert({t.r, t.id, t.h - 1});

    const std::size_t t = ctx.iteration;
    if ((t - 1) % cap_ == 0) {
      const auto phase = static_cast<std::uint32_t>((t - 1) / cap_ + 1);
      if (t > 1 && !s.cluster) {
        const auto top = s.front.best();
        if (top && top->h >= 1) s.cluster = ClusterId{phase - 1, top->id};
      }
      s.front.entries.clear();
      if (!s.cluster) {
        if (phase > budget_) {
          s.failed = true;
          return true;
        }
        std::uint32_t r = 1;
        while (r < cap_ && (ctx.rng.next() & 1) == 0) ++r;
        s.front.insert({r, ctx.id, r});
      }
    }

    Payload send;
    for (auto& e : s.front.entries) {
      if (e.fresh && e.token.h >= 1) send.push_back(e.token);
      e.fresh = false;
    }
    if (!send.empty()) out.broadcast(std::move(send));
    return false;
  }

  bool quiescent(const State& s) const { return s.cluster.has_value(); }

  Output output(const State& s) const { return s.cluster; }

 private:
  std::size_t cap_;
  std::size_t budget_;
};

}  // namespace

bool Clustering::failed() const {
  return std::any_of(cluster.begin(), cluster.end(), [](const auto& c) { return !c.has_value(); }) ||
         !stats.complete;
}

std::size_t Clustering::cluster_count() const {
  std::vector<ClusterId> ids;
  for (const auto& c : cluster)
    if (c) ids.push_back(*c);
  std::sort(ids.begin(), ids.end());
  return static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

Clustering linial_saks(const Graph& g, const sim::RunOptions& opt, std::optional<std::size_t> radius_cap) {
  const std::size_t n = g.vertex_count();
  Clustering result;
  result.radius_cap = radius_cap.value_or(default_radius_cap(n));
  if (result.radius_cap < 1) throw std::invalid_argument("radius cap B must be >= 1");
  const std::size_t budget = std::max<std::size_t>(1, ceil_tolerant(8.0 * log2_of(n)));
  const LinialSaks program(result.radius_cap, budget);
  sim::RunOptions run_opt = opt;
  run_opt.max_rounds = std::max(opt.max_rounds, (budget + 1) * result.radius_cap + 2);
  auto report = sim::run_sync(program, g, run_opt);
  result.cluster = std::move(report.outputs);
  result.stats = report.stats;
  for (const auto& c : result.cluster)
    if (c) result.phase_count = std::max<std::size_t>(result.phase_count, c->phase);
  return result;
}

bool NetworkDecomposition::failed() const {
  return std::any_of(executions.begin(), executions.end(), [](const Clustering& e) { return e.failed(); });
}

NetworkDecomposition generic_network_decomposition(const Graph& g, std::size_t c, const sim::RunOptions& opt,
                                                   std::optional<std::size_t> radius_cap) {
  if (c < 2) throw std::invalid_argument("network decomposition needs c >= 2 executions");
  const std::size_t n = g.vertex_count();
  NetworkDecomposition result;
  result.c = c;
  result.radius_cap = radius_cap.value_or(default_radius_cap(n));

  std::vector<std::map<ClusterId, std::uint64_t>> dense(c);
  std::uint64_t widest = 1;
  for (std::size_t i = 0; i < c; ++i) {
    sim::RunOptions sub = opt;
    sub.seed = derive_seed(opt.seed, i + 1);
    result.executions.push_back(linial_saks(g, sub, result.radius_cap));
    const auto& run = result.executions.back();
    for (const auto& cl : run.cluster)
      if (cl) dense[i].emplace(*cl, 0);
    std::uint64_t next = 0;
    for (auto& [id, index] : dense[i]) index = next++;
    widest = std::max(widest, next);
    result.rounds = std::max(result.rounds, run.stats.rounds);
    result.messages_total += run.stats.messages_total;
  }

  const LabelCodec codec(widest);
  std::vector<std::vector<LabelValue>> domains(n);
  for (std::size_t i = 0; i < c; ++i) {
    const auto& run = result.executions[i];
    for (VertexId v = 0; v < n; ++v)
      if (run.cluster[v]) domains[v].push_back(codec.encode(i, dense[i].at(*run.cluster[v])));
  }
  result.domains = LabelDomain(EntityKind::vertex, std::move(domains), c * widest, widest);
  return result;
}

}  // namespace privlabel
