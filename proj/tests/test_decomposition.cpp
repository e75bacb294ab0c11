#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "doctest.h"
#include "privlabel/decomposition.hpp"
#include "privlabel/generate.hpp"
#include "privlabel/params.hpp"
#include "privlabel/verify.hpp"

using namespace privlabel;

namespace {

Graph gen(const std::string& spec) { return generate(parse_generator_spec(spec)).graph; }

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

sim::RunOptions with_seed(std::uint64_t seed, sim::Execution ex = sim::Execution::parallel) {
  sim::RunOptions o;
  o.seed = seed;
  o.execution = ex;
  return o;
}

std::vector<std::size_t> bfs(const Graph& g, VertexId s) {
  std::vector<std::size_t> dist(g.vertex_count(), SIZE_MAX);
  std::queue<VertexId> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    for (VertexId u : g.neighbors(v))
      if (dist[u] == SIZE_MAX) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
  }
  return dist;
}

// Largest pairwise distance in g between members of the same cluster.
std::size_t max_cluster_weak_diameter(const Graph& g, const Clustering& c) {
  std::size_t worst = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto dist = bfs(g, v);
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      if (c.cluster[u] == c.cluster[v]) worst = std::max(worst, dist[u]);
  }
  return worst;
}

bool acyclic(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : edges) {
    const auto a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

// Every way of giving each vertex's out-edges distinct labels in [1..F];
// returns the number of assignments and whether all of them were forests.
std::pair<std::uint64_t, bool> sweep_assignments(const Graph& g, const Orientation& o, std::uint32_t forests) {
  std::vector<std::uint32_t> label(g.edge_count(), 0);
  std::uint64_t count = 0;
  bool all_ok = true;
  std::function<void(VertexId, std::size_t, std::vector<char>&)> rec;
  auto check = [&] {
    ++count;
    for (std::uint32_t f = 1; f <= forests; ++f) {
      std::vector<Edge> cls;
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (label[e] == f) cls.push_back(g.edge(e));
      if (!acyclic(g.vertex_count(), cls)) all_ok = false;
    }
  };
  rec = [&](VertexId v, std::size_t j, std::vector<char>& used) {
    if (v == g.vertex_count()) {
      check();
      return;
    }
    const auto outs = o.out_edges(v);
    if (j == outs.size()) {
      std::vector<char> fresh(forests + 1, 0);
      rec(v + 1, 0, fresh);
      return;
    }
    for (std::uint32_t f = 1; f <= forests; ++f) {
      if (used[f]) continue;
      used[f] = 1;
      label[outs[j]] = f;
      rec(v, j + 1, used);
      used[f] = 0;
    }
  };
  std::vector<char> used(forests + 1, 0);
  rec(0, 0, used);
  return {count, all_ok};
}

}  // namespace

TEST_CASE("Linial-Saks clustering") {
  SUBCASE("single vertex") {
    const Graph g = Graph::from_edges(1, {});
    const auto c = linial_saks(g, {});
    CHECK_FALSE(c.failed());
    CHECK(c.cluster_count() == 1);
  }
  SUBCASE("path P64") {
    const Graph g = path(64);
    const auto c = linial_saks(g, with_seed(3));
    REQUIRE_FALSE(c.failed());
    CHECK(max_cluster_weak_diameter(g, c) <= 2 * c.radius_cap);
    CHECK(c.radius_cap == default_radius_cap(64));
  }
  SUBCASE("clique K16") {
    const Graph g = gen("clique:n=16");
    const auto c = linial_saks(g, with_seed(2));
    REQUIRE_FALSE(c.failed());
    CHECK(max_cluster_weak_diameter(g, c) <= 1);
  }
  SUBCASE("serial equals parallel") {
    const Graph g = gen("gnp:n=400,p=0.01,seed=2");
    const auto a = linial_saks(g, with_seed(4, sim::Execution::serial));
    const auto b = linial_saks(g, with_seed(4, sim::Execution::parallel));
    CHECK(a.cluster == b.cluster);
    CHECK(a.stats == b.stats);
  }
}

TEST_CASE("generic network decomposition") {
  SUBCASE("single vertex") {
    const auto nd = generic_network_decomposition(Graph::from_edges(1, {}), 2, {});
    CHECK(nd.domains.domain(0).size() == 2);
    const auto v = verify::check_network_decomposition(Graph::from_edges(1, {}), nd.domains, 2, 4);
    CHECK(v.verdict.ok());
    CHECK(v.max_weak_diameter == 0);
    CHECK(v.distinct_labels == 2);
  }
  SUBCASE("path P64, c = 2") {
    const Graph g = path(64);
    const auto nd = generic_network_decomposition(g, 2, with_seed(5));
    REQUIRE_FALSE(nd.failed());
    CHECK(nd.domains.min_size() == 2);
    CHECK(nd.domains.max_size() == 2);
    CHECK(verify::check_network_decomposition(g, nd.domains, 2 * nd.radius_cap, 2 * 4 * 6).verdict.ok());
    // A label <i, j> is held exactly by the members of cluster j of run i.
    const LabelCodec codec(nd.domains.stride());
    for (VertexId u = 0; u < 64; ++u) {
      for (VertexId v = 0; v < 64; ++v) {
        for (std::size_t i = 0; i < 2; ++i) {
          const bool same_label = nd.domains.domain(u)[i] == nd.domains.domain(v)[i];
          const bool same_cluster = nd.executions[i].cluster[u] == nd.executions[i].cluster[v];
          CHECK(same_label == same_cluster);
          CHECK(codec.tag(nd.domains.domain(u)[i]) == i);
        }
      }
    }
  }
  CHECK_THROWS_AS(generic_network_decomposition(path(4), 1, {}), std::invalid_argument);
}

TEST_CASE("H-partition") {
  SUBCASE("star K_{1,9}, a = 1, eps = 2") {
    std::vector<Edge> edges;
    for (VertexId v = 1; v <= 9; ++v) edges.push_back({0, v});
    const Graph star = Graph::from_edges(10, edges);
    const auto hp = h_partition(star, 1, 2.0, {});
    CHECK(hp.threshold == 4);
    CHECK(hp.layer_count <= 2);
    for (VertexId v = 1; v <= 9; ++v) CHECK(hp.layer[v] == 1);
    CHECK(hp.layer[0] == 2);
  }
  SUBCASE("tree, a = 1") {
    const Graph t = gen("random-tree:n=2000,seed=6");
    const auto hp = h_partition(t, 1, 1.0, {});
    CHECK(hp.orientation.max_out_degree() <= 3);
    CHECK(hp.orientation.acyclic());
    CHECK(hp.layer_count <= hp.layer_cap);
  }
  SUBCASE("layers respect the threshold") {
    const Graph g = gen("forest-union:n=1024,a=2,seed=7");
    const auto hp = h_partition(g, 2, 1.0, {});
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::size_t higher = 0;
      for (VertexId u : g.neighbors(v)) higher += hp.layer[u] >= hp.layer[v];
      CHECK(higher <= hp.threshold);
    }
    CHECK(hp.layer_count <= static_cast<std::size_t>(std::floor(2 * std::log2(1024.0))));
  }
  SUBCASE("K8 with a = 1 violates the claim") {
    const Graph k8 = gen("clique:n=8");
    try {
      h_partition(k8, 1, 1.0, {});
      FAIL("expected ArboricityViolation");
    } catch (const ArboricityViolation& e) {
      const auto& w = e.witness();
      REQUIRE_FALSE(w.empty());
      const std::set<VertexId> in(w.begin(), w.end());
      for (VertexId v : w) {
        std::size_t inside = 0;
        for (VertexId u : k8.neighbors(v)) inside += in.count(u);
        CHECK(inside > 3);
      }
    }
  }
}

TEST_CASE("forest decomposition") {
  SUBCASE("K4, id mode") {
    const Graph k4 = gen("clique:n=4");
    const auto fd = forest_decomposition(k4, ForestMode::id_orientation, with_seed(1));
    CHECK(fd.forests == 3);
    CHECK(fd.rounds == 2);
    CHECK(verify::check_forest_labeling(k4, fd.orientation.sources(), fd.edge_labels).ok());
    std::set<std::uint32_t> at_zero;
    for (EdgeId e : fd.orientation.out_edges(0)) at_zero.insert(fd.edge_labels[e]);
    CHECK(at_zero == std::set<std::uint32_t>{1, 2, 3});
  }
  SUBCASE("single edge") {
    const Graph g = parse_edge_list("0 1");
    const auto fd = forest_decomposition(g, ForestMode::id_orientation, {});
    CHECK(fd.forests == 1);
    CHECK(fd.edge_labels == std::vector<std::uint32_t>{1});
  }
  SUBCASE("edge view has contingency factor 1") {
    const Graph g = gen("gnp:n=300,p=0.03,seed=2");
    const auto fd = forest_decomposition(g, ForestMode::id_orientation, {});
    const auto m = verify::metrics(fd.domains, fd.forests, fd.rounds);
    CHECK(*m.contingency_factor == doctest::Approx(1.0));
  }
  SUBCASE("H-partition mode") {
    const Graph g = gen("forest-union:n=1024,a=2,seed=7");
    const auto fd = forest_decomposition(g, ForestMode::h_partition, with_seed(3), 2, 1.0);
    REQUIRE(fd.partition.has_value());
    CHECK(fd.forests == 6);
    CHECK(fd.orientation.max_out_degree() <= 6);
    CHECK(verify::check_forest_labeling(g, fd.orientation.sources(), fd.edge_labels).ok());
    CHECK(std::set<std::uint32_t>(fd.edge_labels.begin(), fd.edge_labels.end()).size() <= 6);
  }
  SUBCASE("serial equals parallel") {
    const Graph g = gen("gnp:n=800,p=0.01,seed=9");
    const auto a = forest_decomposition(g, ForestMode::id_orientation, with_seed(2, sim::Execution::serial));
    const auto b = forest_decomposition(g, ForestMode::id_orientation, with_seed(2, sim::Execution::parallel));
    CHECK(a.edge_labels == b.edge_labels);
  }
}

// Exhaustive oracle: every distinct per-vertex assignment is a valid forest
// decomposition, so every run output is one of equally valid outcomes.
TEST_CASE("all assignments on small graphs are forests") {
  struct Case {
    const char* spec;
    bool h_partition;
    std::size_t a = 0;
  };
  for (const auto& c : {Case{"clique:n=5", false}, Case{"gnp:n=8,p=0.3,seed=1", false},
                        Case{"gnp:n=8,p=0.4,seed=3", false}, Case{"forest-union:n=8,a=1,seed=3", true, 1},
                        Case{"path:n=8", false}}) {
    const std::string spec = c.spec;
    const Graph g = gen(spec);
    CAPTURE(spec);
    const auto fd = forest_decomposition(g, c.h_partition ? ForestMode::h_partition : ForestMode::id_orientation,
                                         {}, c.a, 1.0);
    const auto [count, ok] = sweep_assignments(g, fd.orientation, static_cast<std::uint32_t>(fd.forests));
    CHECK(count > 0);
    CHECK(ok);
    MESSAGE(spec << ": " << count << " assignments, all forests");
  }
}

TEST_CASE("arboricity coloring") {
  SUBCASE("isolated vertex keeps all k") {
    const auto r = arboricity_generic_coloring(Graph::from_edges(4, {}), 1, 1.0, 4.0, {});
    for (VertexId v = 0; v < 4; ++v) CHECK(r.domains.domain(v).size() == r.k);
  }
  SUBCASE("disjointness and expected retention") {
    const Graph g = gen("forest-union:n=512,a=2,seed=7");
    double expected = 0.0, seen = 0.0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto r = arboricity_generic_coloring(g, 2, 1.0, 4.0, with_seed(seed));
      CHECK(verify::check_domains_disjoint(g, r.domains).verdict.ok());
      CHECK(r.domains.problem_domain_size() == 2 * 6 * r.k);
      const double keep = 1.0 - 1.0 / (2.0 * static_cast<double>(r.out_degree_bound));
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        expected += static_cast<double>(r.k) * std::pow(keep, r.partition.orientation.out_degree(v));
        seen += static_cast<double>(r.domains.domain(v).size());
      }
    }
    CHECK(seen == doctest::Approx(expected).epsilon(0.01));
  }
  SUBCASE("serial equals parallel") {
    const Graph g = gen("forest-union:n=600,a=3,seed=1");
    const auto a = arboricity_generic_coloring(g, 3, 1.0, 4.0, with_seed(8, sim::Execution::serial));
    const auto b = arboricity_generic_coloring(g, 3, 1.0, 4.0, with_seed(8, sim::Execution::parallel));
    CHECK(a.domains.domains() == b.domains.domains());
  }
}
