// Acceptance run: one PASS/FAIL line per criterion, with measurements.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "privlabel/cli.hpp"
#include "privlabel/coloring.hpp"
#include "privlabel/coverfree.hpp"
#include "privlabel/decomposition.hpp"
#include "privlabel/edge_coloring.hpp"
#include "privlabel/generate.hpp"
#include "privlabel/params.hpp"
#include "privlabel/verify.hpp"

using namespace privlabel;

namespace {

// Additive constant allowed over log* n for the Linial-based pipelines.
constexpr std::size_t kRoundConstant = 10;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  // Violation text -> occurrences, in first-seen order.
  std::vector<std::pair<std::string, std::size_t>> violations;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    for (auto& [text, count] : violations)
      if (text == what) {
        ++count;
        return;
      }
    violations.emplace_back(what, 1);
  }
};

Graph gen(const std::string& spec) { return generate(parse_generator_spec(spec)).graph; }

sim::RunOptions seeded(std::uint64_t seed) {
  sim::RunOptions o;
  o.seed = seed;
  return o;
}

int failures = 0;

void criterion(int id, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "[exception: " << e.what() << "] ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    o.pass = false;
    o.detail << "[runtime " << secs << " s over the " << limit_seconds << " s limit] ";
  }
  for (const auto& [text, count] : o.violations) o.detail << "[violated: " << text << " (x" << count << ")] ";
  if (!o.pass) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << timing << ") " << o.detail.str()
            << std::endl;
}

// ---- criterion 7 sweep ------------------------------------------------------

// Union-find with undo, one structure per forest class.
class RollbackForest {
 public:
  explicit RollbackForest(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  // Returns false if u and v are already connected (the edge closes a cycle).
  bool unite(std::size_t u, std::size_t v) {
    std::size_t a = find(u), b = find(v);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  void undo() {
    const std::size_t b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_, size_;
  std::vector<std::size_t> history_;
};

struct SweepTotals {
  std::uint64_t graphs = 0;
  std::uint64_t assignments = 0;
  std::uint64_t invalid = 0;
};

// All assignments of distinct labels in [F] to each vertex's out-edges
// (ID orientation, F = Delta), up to renaming of the labels.
void sweep_graph(const Graph& g, SweepTotals& totals) {
  const std::size_t forests = g.max_degree();
  const Orientation o = orient_by_id(g);
  std::vector<EdgeId> order;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (EdgeId e : o.out_edges(v)) order.push_back(e);
  std::vector<RollbackForest> classes(forests, RollbackForest(g.vertex_count()));
  std::vector<std::uint32_t> label(g.edge_count(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t used) {
    if (idx == order.size()) {
      ++totals.assignments;
      return;
    }
    const EdgeId e = order[idx];
    const VertexId src = o.source(e);
    const std::size_t limit = std::min(forests, used + 1);
    for (std::size_t f = 0; f < limit; ++f) {
      bool clash = false;
      for (std::size_t j = 0; j < idx; ++j)
        if (o.source(order[j]) == src && label[order[j]] == f + 1) clash = true;
      if (clash) continue;
      label[e] = static_cast<std::uint32_t>(f + 1);
      if (!classes[f].unite(g.edge(e).u, g.edge(e).v)) {
        // A cycle: count the whole subtree of completions as invalid.
        ++totals.invalid;
        label[e] = 0;
        continue;
      }
      rec(idx + 1, std::max(used, f + 1));
      classes[f].undo();
      label[e] = 0;
    }
  };
  rec(0, 0);
  ++totals.graphs;
}

// ---- criterion 10 enumeration ------------------------------------------------

void for_each_small_graph(std::size_t max_m, const std::function<void(const Graph&)>& fn) {
  std::vector<Edge> edges;
  std::function<void(int)> rec = [&](int maxv) {
    if (!edges.empty()) fn(Graph::from_edges(static_cast<std::size_t>(maxv + 1), edges));
    if (edges.size() == max_m) return;
    const Edge last = edges.empty() ? Edge{0, 0} : edges.back();
    for (int u = 0; u <= maxv + 1; ++u) {
      for (int v = u + 1; v <= maxv + 2; ++v) {
        const Edge e{static_cast<VertexId>(u), static_cast<VertexId>(v)};
        if (!edges.empty() && !(last < e)) continue;
        const bool old_pair = v <= maxv;
        const bool one_new = u <= maxv && v == maxv + 1;
        const bool two_new = u == maxv + 1 && v == maxv + 2;
        if (!old_pair && !one_new && !two_new) continue;
        edges.push_back(e);
        rec(std::max(maxv, v));
        edges.pop_back();
      }
    }
  };
  rec(-1);
}

void for_each_partition(std::size_t m, const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
  std::vector<std::uint64_t> c(m, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t used) {
    if (i == m) {
      fn(c);
      return;
    }
    for (std::uint64_t x = 0; x <= used; ++x) {
      c[i] = x;
      rec(i + 1, std::max(used, x + 1));
    }
  };
  rec(0, 0);
}

}  // namespace

int main() {
  criterion(1, 10.0, [](Outcome& o) {
    const Graph g = gen("gnp:n=1024,p=0.008,dmax=20,seed=7");
    const std::size_t k = sample_count(4.0, 1024);
    o.require(k == 40, "k = 40");
    std::size_t one_round = 0, retained = 0, disjoint = 0, worst = k;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto r = generic_random_coloring(g, 4.0, seeded(seed));
      one_round += r.stats.rounds == 1;
      const std::size_t lo = r.domains.min_size();
      worst = std::min(worst, lo);
      retained += lo >= k / 2;
      disjoint += verify::check_domains_disjoint(g, r.domains).verdict.ok();
    }
    o.detail << "Delta=" << g.max_degree() << " k=" << k << " one-round runs " << one_round
             << "/100, runs with every vertex >= " << k / 2 << " labels " << retained << "/100 (smallest domain seen "
             << worst << "), disjoint " << disjoint << "/100 ";
    o.require(one_round == 100, "1 round in every run");
    o.require(retained >= 99, "retention >= k/2 in >= 99 runs");
    o.require(disjoint == 100, "disjointness in 100/100");
  });

  criterion(2, 30.0, [](Outcome& o) {
    std::size_t worst_c = 0, runs = 0;
    for (std::size_t n : {256u, 1024u, 4096u}) {
      for (const std::string& family : {std::string("random-tree:n=") + std::to_string(n) + ",dmax=10,seed=1",
                                        std::string("gnp:n=") + std::to_string(n) + ",p=" +
                                            std::to_string(8.0 / static_cast<double>(n)) + ",dmax=10,seed=1"}) {
        const Graph g = gen(family);
        const auto r = generic_delta2_coloring(g, {});
        const std::size_t delta = std::max<std::size_t>(1, g.max_degree());
        const std::uint64_t qf = smallest_prime_geq(3 * delta);
        const std::size_t ls = log_star(static_cast<double>(n));
        worst_c = std::max(worst_c, r.stats.rounds > ls ? r.stats.rounds - ls : 0);
        o.require(g.max_degree() <= 10, family + " Delta <= 10");
        o.require(r.q_final == qf && r.domains.problem_domain_size() == qf * qf, family + " palette q_f^2");
        o.require(r.domains.min_size() >= delta, family + " domains >= Delta");
        o.require(verify::check_domains_disjoint(g, r.domains).verdict.ok(), family + " disjoint");
        ++runs;
      }
    }
    o.detail << runs << " inputs, measured C = max(rounds - log* n) = " << worst_c << " ";
    o.require(worst_c <= kRoundConstant, "C <= 10");
  });

  criterion(3, 60.0, [](Outcome& o) {
    const auto ex = verify_cover_free(PolyFamily(1, 5), 4, 0, Exhaustive{});
    o.require(ex.cover_free, "exhaustive (1,5,4)");
    o.require(ex.tuples_checked == binomial_saturating(24, 4) * 25, "all C(24,4)*25 tuples");
    const auto sa = verify_cover_free(PolyFamily(2, 5), 2, 0, Sampled{100000, 1});
    o.require(sa.cover_free && sa.tuples_checked == 100000, "sampled (2,5,2)");
    const PolyFamily fam(2, 7);
    RandomStream rng(3, 0);
    std::size_t violations = 0;
    for (int t = 0; t < 10000; ++t) {
      std::set<std::uint64_t> pick;
      while (pick.size() < 3) pick.insert(rng.uniform(fam.family_size()));
      std::vector<std::uint64_t> v(pick.begin(), pick.end());
      const std::vector<std::uint64_t> others = {v[1], v[2]};
      if (residual_elements(fam, v[0], others, 0).size() < 2) ++violations;
    }
    o.detail << "exhaustive tuples " << ex.tuples_checked << ", sampled " << sa.tuples_checked
             << ", residual violations " << violations << "/10000 ";
    o.require(violations == 0, "residual >= Delta");
  });

  criterion(4, 0.0, [](Outcome& o) {
    const std::string graph = "gnp:n=1024,p=0.02,dmax=16,seed=4";
    o.require(gen(graph).max_degree() == 16, "Delta = 16");
    std::size_t runs = 0, worst_defect = 0, worst_c = 0;
    for (std::uint64_t p : {1u, 2u, 4u}) {
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        cli::RunConfig cfg;
        cfg.algorithm = "defective-coloring";
        cfg.generator = graph;
        cfg.seed = seed;
        cfg.params = {{"p", std::to_string(p)}};
        const auto r = cli::execute(cfg);
        const auto& rep = r.report;
        const std::uint64_t qf = rep["algorithm_output"]["q_final"].get<std::uint64_t>();
        const std::uint64_t palette = rep["metrics"]["problem_domain_size"].get<std::uint64_t>();
        const std::size_t rounds = rep["run"]["rounds"].get<std::size_t>();
        const std::size_t ls = log_star(1024.0);
        worst_c = std::max(worst_c, rounds > ls ? rounds - ls : 0);
        o.require(palette <= 4 * qf * qf, "palette <= 4 q_f^2");
        // Independent recheck of the defect on the domains themselves.
        const Graph g = gen(graph);
        const auto d = generic_defective_coloring(g, p, seeded(seed));
        const auto check = verify::check_defective(g, d.domains, p);
        worst_defect = std::max(worst_defect, check.max_defect * 100 / p);
        o.require(check.verdict.ok(), "worst-case defect <= p");
        o.require(r.exit_code == cli::kOk, "all report verdicts pass");
        ++runs;
      }
    }
    o.detail << runs << " runs, measured C = " << worst_c << ", worst defect/p = " << worst_defect / 100.0 << " ";
    o.require(worst_c <= kRoundConstant, "rounds <= log* n + C");
  });

  criterion(5, 10.0, [](Outcome& o) {
    const Graph g = gen("random-tree:n=100000,seed=5");
    const auto r = cole_vishkin_3coloring(g, orient_forest(g), {});
    o.require(verify::check_proper_vertex(g, std::span<const LabelValue>(r.colors)).ok(), "proper");
    o.require(*std::max_element(r.colors.begin(), r.colors.end()) < 3, "3 colors");
    const std::size_t delta = g.max_degree();
    const auto d = expand_to_generic(r.colors, delta);
    o.require(d.min_size() == delta && d.max_size() == delta, "domains of size Delta");
    const auto m = verify::metrics(d, d.problem_domain_size(), r.stats.rounds);
    o.require(m.contingency_factor && *m.contingency_factor == 3.0, "contingency exactly 3");
    o.detail << "n=100000 Delta=" << delta << " rounds=" << r.stats.rounds << " contingency="
             << m.contingency_factor.value_or(-1) << " ";
  });

  criterion(6, 120.0, [](Outcome& o) {
    std::size_t runs = 0, worst_diam = 0, worst_round_ratio_pct = 0;
    std::ostringstream labels;
    for (std::size_t n : {256u, 1024u, 4096u}) {
      const Graph g = gen("gnp:n=" + std::to_string(n) + ",p=" + std::to_string(4.0 / static_cast<double>(n)) +
                          ",seed=6");
      const std::size_t logn = ceil_tolerant(log2_of(n));
      const std::size_t b = default_radius_cap(n);
      for (std::size_t c : {std::size_t{2}, logn}) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
          const auto nd = generic_network_decomposition(g, c, seeded(seed));
          o.require(!nd.failed(), "every vertex clustered");
          if (nd.failed()) continue;
          const std::size_t budget = c * 4 * logn;
          const auto diam = verify::check_network_decomposition(g, nd.domains, 2 * b, SIZE_MAX);
          o.require(diam.verdict.ok(), "weak diameter <= 2B");
          const auto check = verify::check_network_decomposition(g, nd.domains, 2 * b, budget);
          if (!check.verdict.ok() && diam.verdict.ok()) o.require(false, "distinct labels <= c 4 log n at n=" + std::to_string(n));
          if (seed == 1) {
            // Clusters formed in the same phase are never adjacent, so
            // (execution, phase) classes properly color the cluster graph.
            std::size_t clusters = 0, phases = 0;
            for (const auto& ex : nd.executions) {
              clusters = std::max(clusters, ex.cluster_count());
              phases += ex.phase_count;
            }
            labels << "n=" << n << " c=" << c << ": " << check.distinct_labels << " labels vs budget " << budget
                   << " (max " << clusters << " clusters per execution, " << phases << " phase classes); ";
          }
          o.require(nd.domains.min_size() == c && nd.domains.max_size() == c, "domain size c");
          const double bound = 8.0 * log2_of(n) * log2_of(n);
          o.require(static_cast<double>(nd.rounds) <= bound, "rounds <= 8 log^2 n");
          worst_diam = std::max(worst_diam, check.max_weak_diameter);
          worst_round_ratio_pct =
              std::max(worst_round_ratio_pct, static_cast<std::size_t>(100.0 * static_cast<double>(nd.rounds) / bound));
          ++runs;
        }
      }
    }
    o.detail << labels.str() << runs << " runs, max weak diameter " << worst_diam << ", max rounds / (8 log^2 n) = "
             << worst_round_ratio_pct << "% ";
  });

  criterion(7, 0.0, [](Outcome& o) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Graph g = gen("gnp:n=1024,p=0.012,dmax=16,seed=" + std::to_string(seed));
      const auto fd = forest_decomposition(g, ForestMode::id_orientation, seeded(seed));
      o.require(fd.rounds == 2, "id mode exactly 2 rounds");
      o.require(std::set<std::uint32_t>(fd.edge_labels.begin(), fd.edge_labels.end()).size() <= g.max_degree(),
                "<= Delta classes");
      o.require(verify::check_forest_labeling(g, fd.orientation.sources(), fd.edge_labels).ok(), "acyclic classes");
    }
    SweepTotals totals;
    const std::size_t n = 6;
    std::vector<Edge> all;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) all.push_back({u, v});
    for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t j = 0; j < all.size(); ++j)
        if (mask >> j & 1) edges.push_back(all[j]);
      sweep_graph(Graph::from_edges(n, edges), totals);
    }
    o.require(totals.invalid == 0, "every assignment valid");
    const Graph fu = gen("forest-union:n=1024,a=2,seed=7");
    const auto hp = forest_decomposition(fu, ForestMode::h_partition, seeded(1), 2, 1.0);
    const std::size_t layer_limit = static_cast<std::size_t>(std::floor(2.0 * std::log2(1024.0)));
    o.require(hp.partition->layer_count <= layer_limit, "layers <= floor(2 log n)");
    o.require(hp.orientation.max_out_degree() <= 6, "out-degree <= 6");
    o.require(std::set<std::uint32_t>(hp.edge_labels.begin(), hp.edge_labels.end()).size() <= 6, "<= 6 classes");
    o.require(verify::check_forest_labeling(fu, hp.orientation.sources(), hp.edge_labels).ok(), "H-mode acyclic");
    o.detail << "sweep: " << totals.graphs << " labeled graphs on 6 vertices, " << totals.assignments
             << " assignments up to label renaming, " << totals.invalid << " invalid; H-mode layers "
             << hp.partition->layer_count << ", out-degree " << hp.orientation.max_out_degree() << " ";
  });

  criterion(8, 0.0, [](Outcome& o) {
    const Graph g = gen("forest-union:n=1024,a=2,seed=7");
    std::size_t disjoint = 0, retained = 0, worst = SIZE_MAX, k = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto r = arboricity_generic_coloring(g, 2, 1.0, 4.0, seeded(seed));
      k = r.k;
      disjoint += verify::check_domains_disjoint(g, r.domains).verdict.ok();
      retained += r.domains.min_size() * 2 >= r.k;
      worst = std::min(worst, r.domains.min_size());
      o.require(r.domains.problem_domain_size() == 2 * 6 * r.k, "palette 2 floor(3a) k");
    }
    o.detail << "k=" << k << " disjoint " << disjoint << "/100, runs with every vertex >= k/2 " << retained
             << "/100 (smallest domain seen " << worst << ") ";
    o.require(disjoint == 100, "disjoint 100/100");
    o.require(retained >= 99, "retention >= k/2 in >= 99 runs");
  });

  criterion(9, 0.0, [](Outcome& o) {
    const Graph g = gen("gnp:n=1024,p=0.02,dmax=32,seed=9");
    o.require(g.max_degree() <= 32, "Delta <= 32");
    std::size_t worst_ratio = 0;
    for (std::uint64_t i : {1u, 2u, 4u}) {
      const std::uint64_t numbers = (g.max_degree() + i - 1) / i;
      for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto r = kuhn_defective_edge_coloring(g, i, seeded(seed));
        o.require(r.stats.rounds == 1, "1 round");
        o.require(r.palette <= binomial_saturating(numbers + 1, 2), "palette <= C(L+1, 2)");
        const auto d = verify::check_edge_defect(g, r.colors, 4 * i - 2);
        o.require(d.verdict.ok(), "defect <= 4i - 2");
        worst_ratio = std::max(worst_ratio, d.max_defect);
      }
    }
    // Star with Delta = 4, i = 2: every choice the vertices can make, then the
    // implementation must land only on, and eventually on all of, those colors.
    std::vector<Edge> edges;
    for (VertexId v = 1; v <= 4; ++v) edges.push_back({0, v});
    const Graph star = Graph::from_edges(5, edges);
    std::set<std::uint64_t> model;
    for (std::uint64_t cs = 0; cs < 4; ++cs)
      for (std::uint64_t ls = 0; ls < 4; ++ls) {
        const std::uint64_t a = cs / 2 + 1, b = ls / 2 + 1;
        model.insert(kuhn_color_index(std::min(a, b), std::max(a, b), 2));
      }
    std::vector<std::set<std::uint64_t>> reached(4);
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
      const auto r = kuhn_defective_edge_coloring(star, 2, seeded(seed));
      for (EdgeId e = 0; e < 4; ++e) {
        o.require(model.count(r.colors[e]) == 1, "output within the model");
        reached[e].insert(r.colors[e]);
      }
    }
    bool all = model.size() == kuhn_palette_size(2);
    for (const auto& s : reached) all = all && s == model;
    o.require(all, "every palette color reachable on every star edge");
    o.detail << "Delta=" << g.max_degree() << ", largest measured defect " << worst_ratio << ", star: "
             << model.size() << "/" << kuhn_palette_size(2) << " colors reachable per edge ";
  });

  criterion(10, 0.0, [](Outcome& o) {
    std::size_t graphs = 0, colorings = 0, mismatches = 0;
    for_each_small_graph(6, [&](const Graph& g) {
      ++graphs;
      const Graph lg = line_graph(g).graph;
      for_each_partition(g.edge_count(), [&](const std::vector<std::uint64_t>& c) {
        ++colorings;
        mismatches += verify::check_edge_proper(g, c).ok() != verify::check_proper_vertex(lg, c).ok();
      });
      const auto d = edge_coloring_via_line_graph(g, LineGraphVariant::delta2, {});
      o.require(verify::check_edge_domains_disjoint(g, d.domains).ok(), "delta2 disjoint");
      o.require(d.domains.min_size() >= 2 * g.max_degree() - 1, "delta2 >= 2 Delta - 1 labels");
    });
    for (const char* spec : {"gnp:n=300,p=0.03,dmax=8,seed=1", "clique:n=9", "random-tree:n=500,seed=2"}) {
      const Graph g = gen(spec);
      const auto d = edge_coloring_via_line_graph(g, LineGraphVariant::delta2, {});
      o.require(verify::check_edge_domains_disjoint(g, d.domains).ok(), std::string(spec) + " disjoint");
      o.require(d.domains.min_size() >= 2 * g.max_degree() - 1, std::string(spec) + " >= 2 Delta - 1");
    }
    o.require(mismatches == 0, "proper-edge <=> proper-vertex on L(G)");
    o.detail << graphs << " edge lists with m <= 6 (no isolated vertices, first-appearance vertex order), " << colorings
             << " colorings up to renaming, " << mismatches << " mismatches ";
  });

  criterion(11, 0.0, [](Outcome& o) {
    const std::string graph = "gnp:n=512,p=0.03,dmax=16,seed=11";
    const Graph g = gen(graph);
    o.require(g.max_degree() <= 16, "Delta <= 16");
    std::size_t max_rounds = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      cli::RunConfig cfg;
      cfg.algorithm = "dominating-edge";
      cfg.generator = graph;
      cfg.seed = seed;
      cfg.params = {{"c", "3"}, {"t", "3"}};
      const auto r = cli::execute(cfg);
      for (const auto& v : r.report["verdicts"]) {
        const std::string name = v["name"];
        if (name == "dominating" || name == "class_matchings" || name == "joint_selections" ||
            name == "edge_domains_disjoint") {
          o.require(v["status"] == "pass", name);
        }
      }
      o.require(r.report["algorithm_output"]["selections_sampled"] == 1000, "1000 sampled selections");
      const double cf = r.report["metrics"]["contingency_factor"].get<double>();
      o.require(cf == static_cast<double>(ceil_sqrt(g.max_degree())), "contingency = ceil(sqrt Delta)");
      o.require(r.exit_code == cli::kOk, "run ok");
      max_rounds = std::max(max_rounds, r.report["run"]["rounds"].get<std::size_t>());
    }
    o.detail << "Delta=" << g.max_degree() << ", contingency " << ceil_sqrt(g.max_degree())
             << ", rounds reported (not asserted) up to " << max_rounds << " ";
  });

  criterion(12, 0.0, [](Outcome& o) {
    std::size_t runs = 0;
    for (const auto& row : cli::default_suite()) {
      for (auto seed : row.seeds) {
        cli::RunConfig cfg;
        cfg.algorithm = row.algorithm;
        cfg.generator = row.generator;
        cfg.seed = seed;
        cfg.params = row.params;
        const std::string a = cli::render_json(cli::execute(cfg).report);
        const std::string b = cli::render_json(cli::execute(cfg).report);
        o.require(a == b, row.algorithm + " rerun identical");
        // Through the command-line entry point as well.
        std::vector<std::string> args = {"privlabel", "run", "--algo", row.algorithm, "--gen", row.generator,
                                         "--seed", std::to_string(seed)};
        for (const auto& [k, v] : row.params) {
          args.push_back("--param");
          args.push_back(k + "=" + v);
        }
        std::vector<const char*> argv;
        for (const auto& s : args) argv.push_back(s.c_str());
        std::ostringstream out1, out2, err;
        cli::main_entry(static_cast<int>(argv.size()), argv.data(), out1, err);
        cli::main_entry(static_cast<int>(argv.size()), argv.data(), out2, err);
        o.require(out1.str() == out2.str() && out1.str() == a, row.algorithm + " CLI output identical");
        ++runs;
      }
    }
    o.detail << runs << " suite runs, each executed four times ";
  });

  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
