#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "privlabel/cli.hpp"
#include "privlabel/coloring.hpp"
#include "privlabel/decomposition.hpp"
#include "privlabel/edge_coloring.hpp"
#include "privlabel/generate.hpp"
#include "privlabel/params.hpp"
#include "privlabel/verify.hpp"

namespace privlabel::cli {

namespace {

using verify::Status;
using verify::Verdict;

// Additive slack allowed on top of log* n for the Linial-based pipelines.
constexpr std::size_t kLogStarSlack = 10;
constexpr std::size_t kWitnessShown = 16;
constexpr std::uint64_t kJointSelections = 1000;

// Reads typed parameters, records what was used (defaults included) and
// rejects anything the algorithm did not ask for.
class Params {
 public:
  Params(const std::vector<std::pair<std::string, std::string>>& given, std::string algorithm)
      : algorithm_(std::move(algorithm)) {
    for (const auto& [k, v] : given) {
      if (!given_.emplace(k, v).second) throw ConfigError("parameter '" + k + "' given more than once");
    }
  }

  bool has(const std::string& key) const { return given_.count(key) != 0; }

  std::uint64_t integer(const std::string& key, std::optional<std::uint64_t> fallback, std::uint64_t min = 0) {
    accepted_.push_back(key);
    std::uint64_t value = 0;
    if (auto it = given_.find(key); it != given_.end()) {
      const std::string& text = it->second;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError("parameter '" + key + "': expected a non-negative integer, got '" + text + "'");
      }
      used_.insert(key);
    } else if (fallback) {
      value = *fallback;
    } else {
      throw ConfigError("algorithm '" + algorithm_ + "' requires parameter '" + key + "'");
    }
    if (value < min) throw ConfigError("parameter '" + key + "' must be >= " + std::to_string(min));
    echo_[key] = value;
    return value;
  }

  double real(const std::string& key, double fallback, double exclusive_min) {
    accepted_.push_back(key);
    double value = fallback;
    if (auto it = given_.find(key); it != given_.end()) {
      const std::string& text = it->second;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw ConfigError("parameter '" + key + "': expected a number, got '" + text + "'");
      }
      used_.insert(key);
    }
    if (!(value > exclusive_min)) {
      throw ConfigError("parameter '" + key + "' must be > " + std::to_string(exclusive_min));
    }
    echo_[key] = value;
    return value;
  }

  std::string choice(const std::string& key, const std::string& fallback, const std::vector<std::string>& options) {
    accepted_.push_back(key);
    std::string value = fallback;
    if (auto it = given_.find(key); it != given_.end()) {
      value = it->second;
      used_.insert(key);
    }
    if (std::find(options.begin(), options.end(), value) == options.end()) {
      std::string list;
      for (const auto& o : options) list += (list.empty() ? "" : "|") + o;
      throw ConfigError("parameter '" + key + "' must be one of " + list + ", got '" + value + "'");
    }
    echo_[key] = value;
    return value;
  }

  void finish() const {
    for (const auto& [k, v] : given_) {
      if (used_.count(k)) continue;
      std::string list;
      for (const auto& a : accepted_) list += (list.empty() ? "" : ", ") + a;
      throw ConfigError("unknown parameter '" + k + "' for algorithm '" + algorithm_ + "' (accepted: " + list + ")");
    }
  }

  const Json& echo() const { return echo_; }

 private:
  std::string algorithm_;
  std::map<std::string, std::string> given_;
  std::set<std::string> used_;
  std::vector<std::string> accepted_;
  Json echo_ = Json::object();
};

struct Table1Row {
  std::string problem;
  std::string graph_type;
  std::string rounds;
  std::string solution_domain;
  std::string contingency;
};

struct Outcome {
  Json output = Json::object();
  std::optional<LabelDomain> domains;
  std::optional<verify::MetricsReport> metrics;
  std::size_t rounds = 0;
  std::uint64_t messages = 0;
  bool complete = true;
  std::string round_accounting = "communication rounds on G";
  std::vector<Verdict> verdicts;
  std::optional<Table1Row> table1;
  // Contingency claim: exact value or an upper bound.
  std::optional<double> expected_contingency;
  bool contingency_exact = false;
  std::uint64_t digest_extra = 0;
};

struct Input {
  Graph graph;
  std::optional<std::size_t> arboricity;
  std::string source;
};

struct Context {
  const Input& in;
  Params& params;
  sim::RunOptions opt;
};

Verdict make_verdict(std::string name, bool ok, std::string detail = {}, std::vector<std::uint64_t> witness = {}) {
  Verdict v;
  v.name = std::move(name);
  v.status = ok ? Status::pass : Status::fail;
  if (!ok) {
    v.detail = std::move(detail);
    v.witness = std::move(witness);
  }
  return v;
}

Verdict rounds_at_most(std::size_t rounds, std::size_t bound, const std::string& name) {
  return make_verdict(name, rounds <= bound,
                      "rounds " + std::to_string(rounds) + " exceed " + std::to_string(bound));
}

Verdict nonempty_domains(const LabelDomain& d) {
  std::vector<std::uint64_t> empty;
  for (std::size_t e = 0; e < d.size(); ++e)
    if (d.domain(e).empty()) empty.push_back(e);
  Verdict v = make_verdict("nonempty_domains", empty.empty(), std::to_string(empty.size()) + " entities lost every label",
                           empty);
  if (!empty.empty()) v.status = Status::degenerate;
  return v;
}

Verdict domain_at_least(const LabelDomain& d, std::size_t floor, const std::string& name) {
  const std::size_t lo = d.size() == 0 ? floor : d.min_size();
  return make_verdict(name, lo >= floor,
                      "smallest domain " + std::to_string(lo) + " below " + std::to_string(floor));
}

std::size_t effective_delta(const Graph& g) { return std::max<std::size_t>(g.max_degree(), 1); }

std::size_t arboricity_param(Context& ctx) {
  if (ctx.in.arboricity && !ctx.params.has("a")) return ctx.params.integer("a", *ctx.in.arboricity, 1);
  return ctx.params.integer("a", std::nullopt, 1);
}

Json schedule_json(const std::vector<LinialStep>& schedule) {
  Json arr = Json::array();
  for (const auto& s : schedule) arr.push_back({{"d", s.d}, {"q", s.q}});
  return arr;
}

void take_stats(Outcome& o, const sim::RunStats& s) {
  o.rounds = s.rounds;
  o.messages = s.messages_total;
  o.complete = s.complete;
}

// ---- algorithms -----------------------------------------------------------

Outcome run_cv(Context& ctx) {
  const Graph& g = ctx.in.graph;
  ctx.params.finish();
  Orientation forest;
  try {
    forest = orient_forest(g);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("cv-3delta needs a forest: ") + e.what());
  }
  const auto run = cole_vishkin_3coloring(g, forest, ctx.opt);
  const std::size_t delta = effective_delta(g);
  Outcome o;
  take_stats(o, run.stats);
  o.domains = expand_to_generic(run.colors, delta);
  std::vector<std::uint64_t> bad;
  for (std::size_t v = 0; v < run.colors.size(); ++v)
    if (run.colors[v] >= 3) bad.push_back(v);
  o.verdicts.push_back(verify::check_proper_vertex(g, std::span<const LabelValue>(run.colors)));
  o.verdicts.push_back(make_verdict("three_colors", bad.empty(), "colors outside {0,1,2}", bad));
  o.verdicts.push_back(verify::check_domains_disjoint(g, *o.domains).verdict);
  o.verdicts.push_back(make_verdict("domain_size_delta", o.domains->min_size() == delta && o.domains->max_size() == delta,
                                    "domain sizes differ from Delta"));
  o.verdicts.push_back(rounds_at_most(o.rounds, log_star(static_cast<double>(g.vertex_count())) + kLogStarSlack,
                                      "rounds_log_star"));
  o.output = {{"delta", delta},
              {"cv_steps", cole_vishkin_steps(g.vertex_count())},
              {"colors_used", std::set<Color>(run.colors.begin(), run.colors.end()).size()}};
  o.table1 = Table1Row{"3Delta-coloring", "oriented trees", "O(log* n)", "Delta", "3"};
  o.expected_contingency = 3.0;
  o.contingency_exact = true;
  return o;
}

Outcome run_random(Context& ctx) {
  const Graph& g = ctx.in.graph;
  const double c = ctx.params.real("c", 4.0, 0.0);
  ctx.params.finish();
  const auto run = generic_random_coloring(g, c, ctx.opt);
  Outcome o;
  take_stats(o, run.stats);
  o.domains = run.domains;
  o.verdicts.push_back(verify::check_domains_disjoint(g, run.domains).verdict);
  o.verdicts.push_back(nonempty_domains(run.domains));
  o.verdicts.push_back(rounds_at_most(o.rounds, 1, "rounds_at_most_1"));
  const std::size_t lo = run.domains.size() == 0 ? 0 : run.domains.min_size();
  o.output = {{"k", run.k},
              {"value_range", run.value_range},
              {"retention_min", lo},
              {"retained_half", 2 * lo >= run.k}};
  o.table1 = Table1Row{"2c Delta log n-coloring", "general", "O(1)", "c log n / 2", "O(Delta)"};
  o.expected_contingency = 4.0 * static_cast<double>(effective_delta(g));
  return o;
}

Outcome run_delta2(Context& ctx) {
  const Graph& g = ctx.in.graph;
  ctx.params.finish();
  const auto run = generic_delta2_coloring(g, ctx.opt);
  const std::size_t delta = effective_delta(g);
  Outcome o;
  take_stats(o, run.stats);
  o.domains = run.domains;
  o.verdicts.push_back(verify::check_domains_disjoint(g, run.domains).verdict);
  o.verdicts.push_back(domain_at_least(run.domains, delta, "domain_at_least_delta"));
  o.verdicts.push_back(make_verdict("palette_q_squared", run.domains.problem_domain_size() == run.q_final * run.q_final,
                                    "palette differs from q_f^2"));
  o.verdicts.push_back(rounds_at_most(o.rounds, log_star(static_cast<double>(g.vertex_count())) + kLogStarSlack,
                                      "rounds_log_star"));
  o.output = {{"q_final", run.q_final}, {"schedule", schedule_json(run.schedule)}};
  o.table1 = Table1Row{"O(Delta^2)-coloring", "general", "log* n + O(1)", "Delta", "O(Delta)"};
  o.expected_contingency = static_cast<double>(run.q_final * run.q_final) / static_cast<double>(delta);
  return o;
}

Outcome run_defective(Context& ctx) {
  const Graph& g = ctx.in.graph;
  const std::uint64_t p = ctx.params.integer("p", std::nullopt, 1);
  ctx.params.finish();
  if (p > effective_delta(g)) {
    throw ConfigError("parameter 'p' = " + std::to_string(p) + " exceeds Delta = " + std::to_string(effective_delta(g)));
  }
  const auto run = generic_defective_coloring(g, p, ctx.opt);
  Outcome o;
  take_stats(o, run.stats);
  o.domains = run.domains;
  o.verdicts.push_back(verify::check_defective(g, run.domains, p).verdict);
  o.verdicts.push_back(domain_at_least(run.domains, std::max<std::uint64_t>(run.domain_floor, 1), "domain_floor"));
  o.verdicts.push_back(make_verdict("palette_bound", run.domains.problem_domain_size() <= 4 * run.q_final * run.q_final,
                                    "palette exceeds 4 q_f^2"));
  o.verdicts.push_back(rounds_at_most(o.rounds, log_star(static_cast<double>(g.vertex_count())) + kLogStarSlack,
                                      "rounds_log_star"));
  o.output = {{"p", p},
              {"q_final", run.q_final},
              {"handoff_palette", run.handoff_palette},
              {"domain_floor", run.domain_floor},
              {"schedule", schedule_json(run.schedule)}};
  o.table1 = Table1Row{"p-defective O((Delta/p)^2)-coloring", "general", "O(log* n)", "O(Delta/p)", "O(Delta/p)"};
  o.expected_contingency = static_cast<double>(run.q_final * run.q_final) /
                           static_cast<double>(std::max<std::uint64_t>(run.domain_floor, 1));
  return o;
}

Outcome run_network(Context& ctx) {
  const Graph& g = ctx.in.graph;
  const std::size_t n = g.vertex_count();
  const std::size_t c = ctx.params.integer("c", 2, 2);
  const std::size_t b = ctx.params.integer("B", default_radius_cap(n), 1);
  ctx.params.finish();
  const auto nd = generic_network_decomposition(g, c, ctx.opt, b);
  Outcome o;
  o.rounds = nd.rounds;
  o.messages = nd.messages_total;
  o.complete = !nd.failed();
  for (const auto& ex : nd.executions) o.complete = o.complete && ex.stats.complete;
  const std::size_t log_n = ceil_tolerant(log2_of(n));
  const std::size_t budget = c * std::max<std::size_t>(1, 4 * log_n);
  Json clusters = Json::array();
  Json phases = Json::array();
  for (const auto& ex : nd.executions) {
    clusters.push_back(ex.cluster_count());
    phases.push_back(ex.phase_count);
  }
  if (!nd.failed()) {
    o.domains = nd.domains;
    const auto check = verify::check_network_decomposition(g, nd.domains, 2 * b, budget);
    o.verdicts.push_back(check.verdict);
    o.verdicts.push_back(make_verdict("domain_size_c", nd.domains.min_size() == c && nd.domains.max_size() == c,
                                      "domain sizes differ from c"));
    o.output["max_weak_diameter"] = check.max_weak_diameter;
    o.output["distinct_labels"] = check.distinct_labels;
  } else {
    Verdict v;
    v.name = "clustered";
    v.status = Status::incomplete;
    v.detail = "some vertex stayed unclustered within the phase budget";
    o.verdicts.push_back(v);
  }
  const double lg = log2_of(n);
  o.verdicts.push_back(
      rounds_at_most(o.rounds, static_cast<std::size_t>(std::floor(8.0 * lg * lg + 1e-9)), "rounds_8_log2_squared"));
  o.output["c"] = c;
  o.output["radius_cap"] = b;
  o.output["diameter_bound"] = 2 * b;
  o.output["label_budget"] = budget;
  o.output["clusters"] = clusters;
  o.output["phases"] = phases;
  o.round_accounting = "max over the c parallel executions";
  o.table1 = Table1Row{"(O(log n), O(c log n))-network decomposition", "general", "O(log^2 n)", "c", "O(log n)"};
  o.expected_contingency = static_cast<double>(std::max<std::size_t>(1, 4 * log_n));
  return o;
}

Outcome run_forest(Context& ctx) {
  const Graph& g = ctx.in.graph;
  const std::string mode = ctx.params.choice("mode", "id", {"id", "hpartition"});
  const bool hp = mode == "hpartition";
  std::size_t a = 0;
  double eps = 1.0;
  if (hp) {
    a = arboricity_param(ctx);
    eps = ctx.params.real("eps", 1.0, 0.0);
  }
  ctx.params.finish();
  ForestDecomposition fd;
  try {
    fd = forest_decomposition(g, hp ? ForestMode::h_partition : ForestMode::id_orientation, ctx.opt, a, eps);
  } catch (const ArboricityViolation& e) {
    throw ConfigError(std::string(e.what()) + " (" + std::to_string(e.witness().size()) + " witness vertices)");
  }
  Outcome o;
  o.rounds = fd.rounds;
  o.messages = fd.messages_total;
  o.complete = true;
  o.domains = fd.domains;
  o.verdicts.push_back(verify::check_forest_labeling(g, fd.orientation.sources(), fd.edge_labels));
  const std::size_t classes = std::set<std::uint32_t>(fd.edge_labels.begin(), fd.edge_labels.end()).size();
  o.verdicts.push_back(make_verdict("class_count", classes <= fd.forests, "more classes than forests"));
  o.verdicts.push_back(make_verdict("out_degree", fd.orientation.max_out_degree() <= fd.forests,
                                    "out-degree exceeds the forest count"));
  if (hp) {
    const auto& part = *fd.partition;
    o.complete = part.stats.complete;
    o.verdicts.push_back(make_verdict("layer_cap", part.layer_count <= part.layer_cap, "layer cap exceeded"));
    o.verdicts.push_back(rounds_at_most(o.rounds, part.layer_cap + 1, "rounds_layers"));
    o.output = {{"mode", mode},
                {"forests", fd.forests},
                {"classes_used", classes},
                {"layers", part.layer_count},
                {"layer_cap", part.layer_cap},
                {"threshold", part.threshold},
                {"max_out_degree", fd.orientation.max_out_degree()}};
    o.table1 = Table1Row{"(2+eps)a-forest decomposition", "bounded arboricity a", "O(log n)", "C((2+eps)a, |E(v)|)",
                         "1"};
  } else {
    o.verdicts.push_back(make_verdict("rounds_exact", o.rounds == (g.edge_count() > 0 ? 2u : 0u),
                                      "id mode takes exactly 2 rounds, got " + std::to_string(o.rounds)));
    o.output = {{"mode", mode},
                {"forests", fd.forests},
                {"classes_used", classes},
                {"max_out_degree", fd.orientation.max_out_degree()}};
    o.table1 = Table1Row{"Delta-forest decomposition", "general", "O(1)", "C(Delta, |E(v)|)", "1"};
  }
  o.expected_contingency = 1.0;
  o.contingency_exact = true;
  return o;
}

Outcome run_arboricity(Context& ctx) {
  const Graph& g = ctx.in.graph;
  const std::size_t a = arboricity_param(ctx);
  const double eps = ctx.params.real("eps", 1.0, 0.0);
  const double c = ctx.params.real("c", 4.0, 0.0);
  ctx.params.finish();
  ArboricityColoringResult run;
  try {
    run = arboricity_generic_coloring(g, a, eps, c, ctx.opt);
  } catch (const ArboricityViolation& e) {
    throw ConfigError(std::string(e.what()) + " (" + std::to_string(e.witness().size()) + " witness vertices)");
  }
  Outcome o;
  o.rounds = run.rounds;
  o.messages = run.messages_total;
  o.complete = run.partition.stats.complete;
  o.domains = run.domains;
  o.verdicts.push_back(verify::check_domains_disjoint(g, run.domains).verdict);
  o.verdicts.push_back(nonempty_domains(run.domains));
  const std::uint64_t palette = 2 * std::max<std::size_t>(1, run.out_degree_bound) * run.k;
  o.verdicts.push_back(make_verdict("palette", run.domains.problem_domain_size() == palette,
                                    "palette differs from 2 A k = " + std::to_string(palette)));
  o.verdicts.push_back(make_verdict("layer_cap", run.partition.layer_count <= run.partition.layer_cap,
                                    "layer cap exceeded"));
  o.verdicts.push_back(rounds_at_most(o.rounds, run.partition.layer_cap + 1, "rounds_layers"));
  const std::size_t lo = run.domains.size() == 0 ? 0 : run.domains.min_size();
  o.output = {{"a", a},
              {"k", run.k},
              {"out_degree_bound", run.out_degree_bound},
              {"layers", run.partition.layer_count},
              {"layer_cap", run.partition.layer_cap},
              {"retention_min", lo},
              {"retained_half", 2 * lo >= run.k}};
  o.table1 = Table1Row{"2a c log n-coloring", "bounded arboricity a", "O(log n)", "O(log n) / 2", "O(a)"};
  o.expected_contingency = 4.0 * static_cast<double>(std::max<std::size_t>(1, run.out_degree_bound));
  return o;
}

Outcome run_edge_line(Context& ctx, LineGraphVariant variant) {
  const Graph& g = ctx.in.graph;
  const double c = variant == LineGraphVariant::random ? ctx.params.real("c", 4.0, 0.0) : 4.0;
  ctx.params.finish();
  const auto run = edge_coloring_via_line_graph(g, variant, ctx.opt, c);
  Outcome o;
  take_stats(o, run.stats);
  o.round_accounting = "communication rounds on L(G)";
  o.domains = run.domains;
  o.verdicts.push_back(verify::check_edge_domains_disjoint(g, run.domains));
  const std::size_t lb = std::max<std::size_t>(run.line_degree_bound, 1);
  const std::size_t lo = run.domains.size() == 0 ? 0 : run.domains.min_size();
  if (variant == LineGraphVariant::random) {
    o.verdicts.push_back(nonempty_domains(run.domains));
    o.verdicts.push_back(rounds_at_most(o.rounds, 1, "rounds_at_most_1"));
    o.output = {{"k", run.parameter},
                {"line_degree_bound", run.line_degree_bound},
                {"retention_min", lo},
                {"retained_half", 2 * lo >= run.parameter}};
    o.table1 = Table1Row{"O(Delta log n)-edge coloring", "general", "O(1)", "c log n", "O(Delta)"};
    o.expected_contingency = 4.0 * static_cast<double>(lb);
  } else {
    o.verdicts.push_back(domain_at_least(run.domains, lb, "domain_at_least_2delta_minus_1"));
    o.verdicts.push_back(make_verdict("palette_q_squared",
                                      run.domains.problem_domain_size() == run.parameter * run.parameter,
                                      "palette differs from q_f^2"));
    o.verdicts.push_back(rounds_at_most(o.rounds, log_star(static_cast<double>(g.edge_count())) + kLogStarSlack,
                                        "rounds_log_star"));
    o.output = {{"q_final", run.parameter}, {"line_degree_bound", run.line_degree_bound}};
    o.table1 = Table1Row{"O(Delta^2)-edge coloring", "general", "log* n + O(1)", "2 Delta - 1", "O(Delta)"};
    o.expected_contingency = static_cast<double>(run.parameter * run.parameter) / static_cast<double>(lb);
  }
  return o;
}

Outcome run_kuhn(Context& ctx) {
  const Graph& g = ctx.in.graph;
  const std::uint64_t i = ctx.params.integer("i", std::nullopt, 1);
  ctx.params.finish();
  if (i > effective_delta(g)) {
    throw ConfigError("parameter 'i' = " + std::to_string(i) + " exceeds Delta = " + std::to_string(effective_delta(g)));
  }
  const auto run = kuhn_defective_edge_coloring(g, i, ctx.opt);
  Outcome o;
  take_stats(o, run.stats);
  const std::size_t bound = 4 * i - 2;
  const auto defect = verify::check_edge_defect(g, run.colors, bound);
  o.verdicts.push_back(defect.verdict);
  std::vector<std::uint64_t> outside;
  for (EdgeId e = 0; e < run.colors.size(); ++e)
    if (run.colors[e] >= run.palette) outside.push_back(e);
  o.verdicts.push_back(make_verdict("colors_in_palette", outside.empty(), "colors outside the palette", outside));
  o.verdicts.push_back(make_verdict("palette_bound", run.palette <= kuhn_palette_size(run.numbers),
                                    "palette exceeds C(L+1, 2)"));
  o.verdicts.push_back(rounds_at_most(o.rounds, 1, "rounds_at_most_1"));
  // Every edge may end up with any palette color, so the domain of each edge
  // is the whole palette; it is not materialized.
  verify::MetricsReport m;
  m.problem_domain_size = run.palette;
  if (g.edge_count() > 0) {
    m.solution_domain_min = m.solution_domain_max = run.palette;
    m.solution_domain_median = static_cast<double>(run.palette);
    m.contingency_factor = 1.0;
  }
  m.rounds = o.rounds;
  o.metrics = m;
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto c : run.colors) h = (h ^ c) * 0x100000001b3ull;
  o.digest_extra = h;
  o.output = {{"i", i},
              {"numbers", run.numbers},
              {"palette", run.palette},
              {"defect_bound", bound},
              {"max_defect", defect.max_defect}};
  o.table1 = Table1Row{"p-defective O((Delta/p)^2)-edge coloring", "general", "O(1)", "O((Delta/p)^2)", "1"};
  o.expected_contingency = 1.0;
  o.contingency_exact = true;
  return o;
}

Outcome run_dominating(Context& ctx) {
  const Graph& g = ctx.in.graph;
  const std::uint64_t c = ctx.params.integer("c", 3, 2);
  const std::uint64_t t = ctx.params.integer("t", 3, 2);
  ctx.params.finish();
  if (g.max_degree() < 1) throw ConfigError("dominating-edge needs a graph with at least one edge");
  const auto run = dominating_edge_coloring(g, c, t, ctx.opt);
  Outcome o;
  o.rounds = run.rounds();
  o.complete = run.complete;
  o.round_accounting = "base coloring rounds + max per-class matching rounds, on L(G)";
  o.domains = run.domains;
  o.verdicts.push_back(verify::check_edge_proper(g, run.base_colors));
  o.verdicts.push_back(verify::check_edge_dominating(g, run.d_edges));

  // Per class, D must be a maximal matching of the class subgraph.
  Verdict classes = make_verdict("class_matchings", true);
  std::vector<std::vector<EdgeId>> members(run.classes);
  for (EdgeId e = 0; e < g.edge_count(); ++e) members[run.class_of[e] - 1].push_back(e);
  for (std::uint64_t cls = 0; cls < run.classes && classes.ok(); ++cls) {
    std::vector<Edge> edges;
    std::vector<EdgeId> chosen;
    for (std::size_t j = 0; j < members[cls].size(); ++j) {
      edges.push_back(g.edge(members[cls][j]));
      if (run.in_d[members[cls][j]]) chosen.push_back(static_cast<EdgeId>(j));
    }
    const Graph sub = Graph::from_edges(g.vertex_count(), edges);
    Verdict v = verify::check_maximal_matching(sub, chosen);
    if (!v.ok()) {
      classes = v;
      classes.name = "class_matchings";
      classes.detail = "class " + std::to_string(cls + 1) + ": " + v.detail;
    }
  }
  o.verdicts.push_back(classes);

  std::vector<Edge> d_list;
  for (EdgeId e : run.d_edges) d_list.push_back(g.edge(e));
  const Graph dg = Graph::from_edges(g.vertex_count(), d_list);
  o.verdicts.push_back(verify::check_edge_domains_disjoint(dg, run.domains));
  RandomStream pick(derive_seed(ctx.opt.seed, 0x73656C656374ull), 0);
  Verdict joint = make_verdict("joint_selections", true);
  std::vector<std::uint64_t> sel(run.d_edges.size());
  for (std::uint64_t s = 0; s < kJointSelections && joint.ok() && !sel.empty(); ++s) {
    for (std::size_t j = 0; j < sel.size(); ++j) {
      const auto dom = run.domains.domain(j);
      sel[j] = dom[pick.uniform(dom.size())];
    }
    Verdict v = verify::check_edge_proper(dg, sel);
    if (!v.ok()) {
      joint = v;
      joint.name = "joint_selections";
    }
  }
  o.verdicts.push_back(joint);
  o.output = {{"c", c},
              {"t", t},
              {"classes", run.classes},
              {"class_width", run.class_width},
              {"base_palette", run.base_palette},
              {"d_size", run.d_edges.size()},
              {"coloring_rounds", run.coloring_rounds},
              {"matching_rounds", run.matching_rounds},
              {"selections_sampled", run.d_edges.empty() ? 0 : kJointSelections},
              {"round_bound_asserted", false}};
  o.table1 = Table1Row{"(t sqrt Delta)-edge coloring of a dominating set", "general",
                       "O~(log Delta + log^3 log n)", "t", "sqrt Delta"};
  o.expected_contingency = static_cast<double>(run.classes);
  o.contingency_exact = true;
  return o;
}

Outcome run_linial_saks(Context& ctx) {
  const Graph& g = ctx.in.graph;
  const std::size_t b = ctx.params.integer("B", default_radius_cap(g.vertex_count()), 1);
  ctx.params.finish();
  const auto cl = linial_saks(g, ctx.opt, b);
  Outcome o;
  take_stats(o, cl.stats);
  o.complete = o.complete && !cl.failed();
  if (!cl.failed()) {
    std::vector<ClusterId> ids;
    for (const auto& c : cl.cluster) ids.push_back(*c);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<std::vector<LabelValue>> dom(g.vertex_count());
    for (std::size_t v = 0; v < dom.size(); ++v)
      dom[v] = {static_cast<LabelValue>(std::lower_bound(ids.begin(), ids.end(), *cl.cluster[v]) - ids.begin())};
    const LabelDomain d(EntityKind::vertex, std::move(dom), std::max<std::size_t>(ids.size(), 1), 1);
    const auto check = verify::check_network_decomposition(g, d, 2 * b, std::max<std::size_t>(ids.size(), 1));
    Verdict v = check.verdict;
    v.name = "cluster_weak_diameter";
    o.verdicts.push_back(v);
    o.output["max_weak_diameter"] = check.max_weak_diameter;
  } else {
    Verdict v;
    v.name = "clustered";
    v.status = Status::incomplete;
    v.detail = "some vertex stayed unclustered within the phase budget";
    o.verdicts.push_back(v);
  }
  o.output["radius_cap"] = b;
  o.output["clusters"] = cl.cluster_count();
  o.output["phases"] = cl.phase_count;
  return o;
}

Outcome run_hpartition(Context& ctx) {
  const Graph& g = ctx.in.graph;
  const std::size_t a = arboricity_param(ctx);
  const double eps = ctx.params.real("eps", 1.0, 0.0);
  ctx.params.finish();
  HPartition hp;
  try {
    hp = h_partition(g, a, eps, ctx.opt);
  } catch (const ArboricityViolation& e) {
    throw ConfigError(std::string(e.what()) + " (" + std::to_string(e.witness().size()) + " witness vertices)");
  }
  Outcome o;
  take_stats(o, hp.stats);
  o.verdicts.push_back(make_verdict("layer_cap", hp.layer_count <= hp.layer_cap, "layer cap exceeded"));
  o.verdicts.push_back(make_verdict("acyclic", hp.orientation.acyclic(), "orientation has a cycle"));
  o.verdicts.push_back(make_verdict("out_degree", hp.orientation.max_out_degree() <= hp.threshold,
                                    "out-degree exceeds the threshold"));
  o.output = {{"a", a},
              {"threshold", hp.threshold},
              {"layers", hp.layer_count},
              {"layer_cap", hp.layer_cap},
              {"max_out_degree", hp.orientation.max_out_degree()}};
  return o;
}

Outcome run_simple_edge(Context& ctx) {
  const Graph& g = ctx.in.graph;
  const std::uint64_t lb = g.max_degree() == 0 ? 1 : 2 * g.max_degree() - 1;
  const std::uint64_t palette = ctx.params.integer("palette", lb, 1);
  ctx.params.finish();
  if (palette < lb) throw ConfigError("parameter 'palette' must be >= 2 Delta - 1 = " + std::to_string(lb));
  const auto run = simple_edge_coloring(g, palette, ctx.opt);
  Outcome o;
  take_stats(o, run.stats);
  o.round_accounting = "communication rounds on L(G)";
  o.verdicts.push_back(verify::check_edge_proper(g, run.colors));
  o.output = {{"palette", palette}};
  return o;
}

Outcome run_matching(Context& ctx) {
  const Graph& g = ctx.in.graph;
  ctx.params.finish();
  const auto run = maximal_matching(g, ctx.opt);
  Outcome o;
  take_stats(o, run.stats);
  o.complete = o.complete && run.complete;
  o.round_accounting = "communication rounds on L(G)";
  o.verdicts.push_back(verify::check_maximal_matching(g, run.matching));
  o.output = {{"matching_size", run.matching.size()}};
  return o;
}

using Runner = std::function<Outcome(Context&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> table = {
      {"cv-3delta", run_cv},
      {"random-coloring", run_random},
      {"delta2-coloring", run_delta2},
      {"defective-coloring", run_defective},
      {"arboricity-coloring", run_arboricity},
      {"network-decomposition", run_network},
      {"forest-decomposition", run_forest},
      {"edge-random", [](Context& c) { return run_edge_line(c, LineGraphVariant::random); }},
      {"edge-delta2", [](Context& c) { return run_edge_line(c, LineGraphVariant::delta2); }},
      {"kuhn-edge", run_kuhn},
      {"dominating-edge", run_dominating},
      {"linial-saks", run_linial_saks},
      {"h-partition", run_hpartition},
      {"simple-edge-coloring", run_simple_edge},
      {"maximal-matching", run_matching},
  };
  return table;
}

Input load_input(const RunConfig& config) {
  if (config.graph_file.empty() == config.generator.empty()) {
    throw ConfigError("exactly one of --graph or --gen is required");
  }
  Input in;
  try {
    if (!config.generator.empty()) {
      const GeneratorSpec spec = parse_generator_spec(config.generator);
      auto gen = generate(spec);
      in.graph = std::move(gen.graph);
      in.arboricity = gen.arboricity;
      in.source = "gen:" + to_string(spec);
    } else {
      in.graph = load_edge_list_file(config.graph_file);
      in.source = "file:" + config.graph_file;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::runtime_error& e) {
    throw ConfigError(e.what());
  }
  return in;
}

std::string hex64(std::uint64_t x) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, x >>= 4) s[static_cast<std::size_t>(i)] = digits[x & 0xF];
  return s;
}

std::uint64_t digest(const std::optional<LabelDomain>& d, std::uint64_t extra) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i, x >>= 8) h = (h ^ (x & 0xFF)) * 0x100000001b3ull;
  };
  mix(extra);
  if (d) {
    mix(d->problem_domain_size());
    mix(d->stride());
    for (const auto& dom : d->domains()) {
      mix(dom.size());
      for (auto x : dom) mix(x);
    }
  }
  return h;
}

Json verdict_json(const Verdict& v) {
  Json j = {{"name", v.name}, {"status", std::string(verify::to_string(v.status))}};
  if (!v.detail.empty()) j["detail"] = v.detail;
  if (!v.witness.empty()) {
    const auto shown = std::min(v.witness.size(), kWitnessShown);
    j["witness"] = std::vector<std::uint64_t>(v.witness.begin(), v.witness.begin() + static_cast<std::ptrdiff_t>(shown));
    j["witness_total"] = v.witness.size();
  }
  return j;
}

Json metrics_json(const verify::MetricsReport& m) {
  Json j = {{"problem_domain_size", m.problem_domain_size},
            {"solution_domain_min", m.solution_domain_min},
            {"solution_domain_median", m.solution_domain_median},
            {"solution_domain_max", m.solution_domain_max}};
  j["contingency_factor"] = m.contingency_factor ? Json(*m.contingency_factor) : Json(nullptr);
  j["rounds"] = m.rounds;
  return j;
}

}  // namespace

const std::vector<std::string>& algorithm_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> t;
    for (const auto& [name, _] : registry()) t.push_back(name);
    return t;
  }();
  return tags;
}

RunResult execute(const RunConfig& config) {
  const auto& table = registry();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == config.algorithm; });
  if (it == table.end()) {
    std::string list;
    for (const auto& t : algorithm_tags()) list += (list.empty() ? "" : ", ") + t;
    throw ConfigError("unknown algorithm '" + config.algorithm + "' (known: " + list + ")");
  }
  const Input in = load_input(config);
  Params params(config.params, config.algorithm);
  sim::RunOptions opt;
  opt.seed = config.seed;
  opt.max_rounds = params.integer("max_rounds", 1000, 1);
  opt.execution = config.serial ? sim::Execution::serial : sim::Execution::parallel;
  Context ctx{in, params, opt};

  Outcome o;
  try {
    o = it->second(ctx);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!o.metrics && o.domains) o.metrics = verify::metrics(*o.domains, o.domains->problem_domain_size(), o.rounds);

  const Graph& g = in.graph;
  Json report;
  report["tool"] = "privlabel";
  report["algorithm"] = config.algorithm;
  Json graph = {{"source", in.source}, {"n", g.vertex_count()}, {"m", g.edge_count()}, {"max_degree", g.max_degree()}};
  if (in.arboricity) graph["arboricity_bound"] = *in.arboricity;
  report["graph"] = graph;
  report["seed"] = config.seed;
  report["params"] = params.echo();
  report["run"] = {{"rounds", o.rounds},
                   {"messages_total", o.messages},
                   {"complete", o.complete},
                   {"round_accounting", o.round_accounting}};
  report["algorithm_output"] = o.output;
  report["metrics"] = o.metrics ? metrics_json(*o.metrics) : Json(nullptr);
  if (o.table1) {
    Json row = {{"problem", o.table1->problem},
                {"graph_type", o.table1->graph_type},
                {"rounds", o.table1->rounds},
                {"solution_domain", o.table1->solution_domain},
                {"contingency", o.table1->contingency}};
    if (o.expected_contingency) {
      const bool has_measured = o.metrics && o.metrics->contingency_factor.has_value();
      const double measured = has_measured ? o.metrics->contingency_factor.value() : 0.0;
      const double expected = *o.expected_contingency;
      Json cmp = {{"kind", o.contingency_exact ? "exact" : "upper_bound"}, {"expected", expected}};
      cmp["measured"] = has_measured ? Json(measured) : Json(nullptr);
      cmp["holds"] = has_measured && (o.contingency_exact ? std::abs(measured - expected) < 1e-9
                                                          : measured <= expected + 1e-9);
      row["contingency_check"] = cmp;
    }
    report["table1"] = row;
  } else {
    report["table1"] = nullptr;
  }
  Json verdicts = Json::array();
  bool all_pass = true;
  for (const auto& v : o.verdicts) {
    verdicts.push_back(verdict_json(v));
    all_pass = all_pass && v.ok();
  }
  report["verdicts"] = verdicts;
  report["domains_digest"] = hex64(digest(o.domains, o.digest_extra));
  if (config.emit_domains && o.domains) {
    Json doms = Json::array();
    for (const auto& d : o.domains->domains()) doms.push_back(d);
    report["domains"] = doms;
  }

  RunResult result;
  if (!o.complete) {
    result.exit_code = kIncomplete;
    report["status"] = "incomplete";
  } else if (!all_pass) {
    result.exit_code = kVerdictFailure;
    report["status"] = "verdict_failure";
  } else {
    report["status"] = "ok";
  }
  result.report = std::move(report);
  return result;
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string scalar(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace

std::string render_csv(const std::vector<Json>& reports) {
  static const char* header =
      "algorithm,source,n,m,max_degree,seed,rounds,messages_total,complete,problem_domain_size,"
      "solution_domain_min,solution_domain_median,solution_domain_max,contingency_factor,verdicts_passed,"
      "verdicts_total,status,domains_digest\n";
  std::string out = header;
  for (const auto& r : reports) {
    std::vector<std::string> f;
    f.push_back(scalar(r["algorithm"]));
    f.push_back(scalar(r["graph"]["source"]));
    f.push_back(scalar(r["graph"]["n"]));
    f.push_back(scalar(r["graph"]["m"]));
    f.push_back(scalar(r["graph"]["max_degree"]));
    f.push_back(scalar(r["seed"]));
    f.push_back(scalar(r["run"]["rounds"]));
    f.push_back(scalar(r["run"]["messages_total"]));
    f.push_back(scalar(r["run"]["complete"]));
    const Json& m = r["metrics"];
    for (const char* key : {"problem_domain_size", "solution_domain_min", "solution_domain_median",
                            "solution_domain_max", "contingency_factor"}) {
      f.push_back(m.is_null() ? "" : scalar(m[key]));
    }
    std::size_t passed = 0;
    for (const auto& v : r["verdicts"])
      if (v["status"] == "pass") ++passed;
    f.push_back(std::to_string(passed));
    f.push_back(std::to_string(r["verdicts"].size()));
    f.push_back(scalar(r["status"]));
    f.push_back(scalar(r["domains_digest"]));
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + csv_field(f[i]);
    out += "\n";
  }
  return out;
}

}  // namespace privlabel::cli
