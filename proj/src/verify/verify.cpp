#include "privlabel/verify.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace privlabel::verify {

namespace {

Verdict pass(std::string name) { return {std::move(name), Status::pass, {}, {}}; }

Verdict failed(std::string name, Status s, std::string detail, std::vector<std::uint64_t> witness) {
  return {std::move(name), s, std::move(detail), std::move(witness)};
}

std::string edge_text(std::uint64_t u, std::uint64_t v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

struct UnionFind {
  std::vector<VertexId> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), VertexId{0}); }
  VertexId find(VertexId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::incomplete:
      return "incomplete";
    case Status::degenerate:
      return "degenerate";
  }
  return "unknown";
}

Verdict check_proper_vertex(const Graph& g, std::span<const std::optional<LabelValue>> labels) {
  const char* name = "proper_vertex";
  if (labels.size() != g.vertex_count()) {
    return failed(name, Status::incomplete, "label count differs from vertex count", {});
  }
  for (VertexId v = 0; v < labels.size(); ++v) {
    if (!labels[v]) return failed(name, Status::incomplete, "vertex " + std::to_string(v) + " has no label", {v});
  }
  for (const Edge& e : g.edges()) {
    if (*labels[e.u] == *labels[e.v]) {
      return failed(name, Status::fail, "edge " + edge_text(e.u, e.v) + " is monochromatic", {e.u, e.v});
    }
  }
  return pass(name);
}

Verdict check_proper_vertex(const Graph& g, std::span<const LabelValue> labels) {
  std::vector<std::optional<LabelValue>> wrapped(labels.begin(), labels.end());
  return check_proper_vertex(g, wrapped);
}

DisjointnessVerdict check_domains_disjoint(const Graph& g, const LabelDomain& domains, std::uint64_t sweep_budget) {
  const char* name = "domains_disjoint";
  const std::size_t n = g.vertex_count();
  DisjointnessVerdict out{pass(name), 0};
  if (domains.size() != n) {
    out.verdict = failed(name, Status::incomplete, "domain count differs from vertex count", {});
    return out;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (domains.domain(v).empty()) {
      out.verdict = failed(name, Status::degenerate, "vertex " + std::to_string(v) + " has an empty domain", {v});
      return out;
    }
  }
  std::optional<Verdict> structural;
  for (const Edge& e : g.edges()) {
    const auto a = domains.domain(e.u);
    const auto b = domains.domain(e.v);
    std::vector<LabelValue> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (!common.empty()) {
      structural = failed(name, Status::fail,
                          "edge " + edge_text(e.u, e.v) + " shares label " + std::to_string(common.front()),
                          {e.u, e.v, common.front()});
      break;
    }
  }

  if (n <= 8) {
    std::uint64_t total = 1;
    for (VertexId v = 0; v < n && total <= sweep_budget; ++v) total *= domains.domain(v).size();
    if (total <= sweep_budget) {
      bool every_selection_proper = true;
      std::vector<std::size_t> pick(n, 0);
      std::vector<LabelValue> labels(n);
      for (std::uint64_t s = 0; s < total; ++s) {
        for (VertexId v = 0; v < n; ++v) labels[v] = domains.domain(v)[pick[v]];
        if (!check_proper_vertex(g, labels).ok()) every_selection_proper = false;
        for (VertexId v = 0; v < n; ++v) {
          if (++pick[v] < domains.domain(v).size()) break;
          pick[v] = 0;
        }
      }
      out.selections_checked = total;
      if (every_selection_proper == structural.has_value()) {
        out.verdict = failed(name, Status::fail, "structural check and selection sweep disagree", {});
        return out;
      }
    }
  }
  if (structural) out.verdict = *structural;
  return out;
}

DefectVerdict check_defective(const Graph& g, std::span<const LabelValue> labels, std::size_t p) {
  DefectVerdict out{pass("defect_labels"), 0};
  VertexId worst = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t same = 0;
    for (VertexId u : g.neighbors(v)) same += labels[u] == labels[v];
    if (same > out.max_defect) {
      out.max_defect = same;
      worst = v;
    }
  }
  if (out.max_defect > p) {
    out.verdict = failed("defect_labels", Status::fail,
                         "vertex " + std::to_string(worst) + " has " + std::to_string(out.max_defect) +
                             " same-labeled neighbors > " + std::to_string(p),
                         {worst});
  }
  return out;
}

DefectVerdict check_defective(const Graph& g, const LabelDomain& domains, std::size_t p) {
  DefectVerdict out{pass("defect_domains"), 0};
  std::uint64_t worst_v = 0;
  LabelValue worst_x = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (domains.domain(v).empty()) {
      out.verdict = failed("defect_domains", Status::degenerate, "vertex " + std::to_string(v) + " has an empty domain",
                           {v});
      return out;
    }
    for (LabelValue x : domains.domain(v)) {
      std::size_t holders = 0;
      for (VertexId u : g.neighbors(v)) {
        const auto d = domains.domain(u);
        holders += std::binary_search(d.begin(), d.end(), x);
      }
      if (holders > out.max_defect) {
        out.max_defect = holders;
        worst_v = v;
        worst_x = x;
      }
    }
  }
  if (out.max_defect > p) {
    out.verdict = failed("defect_domains", Status::fail,
                         "label " + std::to_string(worst_x) + " of vertex " + std::to_string(worst_v) + " is held by " +
                             std::to_string(out.max_defect) + " neighbors > " + std::to_string(p),
                         {worst_v, worst_x});
  }
  return out;
}

Verdict check_forest_labeling(const Graph& g, std::span<const VertexId> sources, std::span<const std::uint32_t> labels) {
  const char* name = "forest_labeling";
  const std::size_t m = g.edge_count();
  if (labels.size() != m || sources.size() != m) return failed(name, Status::incomplete, "size mismatch", {});
  for (EdgeId e = 0; e < m; ++e) {
    if (labels[e] == 0) return failed(name, Status::incomplete, "edge " + std::to_string(e) + " is unlabeled", {e});
    if (sources[e] != g.edge(e).u && sources[e] != g.edge(e).v) {
      return failed(name, Status::fail, "edge " + std::to_string(e) + " has a source outside its endpoints", {e});
    }
  }

  std::vector<std::pair<VertexId, std::uint32_t>> out_labels;
  out_labels.reserve(m);
  for (EdgeId e = 0; e < m; ++e) out_labels.emplace_back(sources[e], labels[e]);
  std::sort(out_labels.begin(), out_labels.end());
  for (std::size_t j = 1; j < out_labels.size(); ++j) {
    if (out_labels[j] == out_labels[j - 1]) {
      return failed(name, Status::fail,
                    "vertex " + std::to_string(out_labels[j].first) + " uses label " +
                        std::to_string(out_labels[j].second) + " on two out-edges",
                    {out_labels[j].first, out_labels[j].second});
    }
  }

  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return labels[a] < labels[b]; });
  UnionFind uf(g.vertex_count());
  std::vector<VertexId> touched;
  for (std::size_t j = 0; j < m; ++j) {
    if (j > 0 && labels[order[j]] != labels[order[j - 1]]) {
      for (VertexId v : touched) uf.parent[v] = v;
      touched.clear();
    }
    const Edge& e = g.edge(order[j]);
    touched.push_back(e.u);
    touched.push_back(e.v);
    const VertexId a = uf.find(e.u);
    const VertexId b = uf.find(e.v);
    if (a == b) {
      return failed(name, Status::fail,
                    "label " + std::to_string(labels[order[j]]) + " closes a cycle at edge " + edge_text(e.u, e.v),
                    {order[j], labels[order[j]]});
    }
    uf.parent[a] = b;
  }
  return pass(name);
}

DecompositionVerdict check_network_decomposition(const Graph& g, const LabelDomain& domains,
                                                 std::size_t diameter_bound, std::size_t label_budget) {
  const char* name = "network_decomposition";
  const std::size_t n = g.vertex_count();
  DecompositionVerdict out{pass(name), 0, 0};
  if (domains.size() != n) {
    out.verdict = failed(name, Status::incomplete, "domain count differs from vertex count", {});
    return out;
  }
  if (n == 0) return out;
  const std::size_t c = domains.domain(0).size();
  for (VertexId v = 0; v < n; ++v) {
    if (domains.domain(v).size() != c || c == 0) {
      out.verdict = failed(name, c == 0 ? Status::degenerate : Status::fail,
                           "vertex " + std::to_string(v) + " has domain size " +
                               std::to_string(domains.domain(v).size()) + ", expected uniform size " + std::to_string(c),
                           {v});
      return out;
    }
  }

  std::vector<std::pair<LabelValue, VertexId>> holders;
  holders.reserve(n * c);
  for (VertexId v = 0; v < n; ++v)
    for (LabelValue x : domains.domain(v)) holders.emplace_back(x, v);
  std::sort(holders.begin(), holders.end());
  std::vector<std::size_t> group_start;
  for (std::size_t j = 0; j < holders.size(); ++j)
    if (j == 0 || holders[j].first != holders[j - 1].first) group_start.push_back(j);
  group_start.push_back(holders.size());
  out.distinct_labels = group_start.size() - 1;

  constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
  std::size_t worst = 0;
  std::vector<std::uint64_t> worst_witness;

  // Bit-parallel BFS from up to 64 holders at once; a holder's distance to
  // the farthest source in the batch is the level at which its visited
  // mask fills up.
  const auto groups = static_cast<std::int64_t>(group_start.size() - 1);
#pragma omp parallel
  {
    std::vector<std::uint64_t> visited(n), frontier(n), next(n);
    std::vector<char> is_holder(n, 0);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t gi = 0; gi < groups; ++gi) {
      const std::size_t lo = group_start[gi];
      const std::size_t hi = group_start[gi + 1];
      if (hi - lo < 2) continue;
      for (std::size_t j = lo; j < hi; ++j) is_holder[holders[j].second] = 1;
      std::size_t local = 0;
      std::vector<std::uint64_t> local_witness;
      for (std::size_t b = lo; b < hi; b += 64) {
        const std::size_t batch = std::min<std::size_t>(64, hi - b);
        const std::uint64_t full = batch == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << batch) - 1;
        std::fill(visited.begin(), visited.end(), 0);
        std::fill(frontier.begin(), frontier.end(), 0);
        for (std::size_t j = 0; j < batch; ++j) {
          const VertexId s = holders[b + j].second;
          visited[s] |= std::uint64_t{1} << j;
          frontier[s] |= std::uint64_t{1} << j;
        }
        std::size_t open = 0;
        for (std::size_t j = lo; j < hi; ++j) open += visited[holders[j].second] != full;
        std::size_t level = 0;
        bool moving = true;
        while (open > 0 && moving) {
          ++level;
          moving = false;
          for (VertexId v = 0; v < n; ++v) {
            std::uint64_t acc = 0;
            for (VertexId u : g.neighbors(v)) acc |= frontier[u];
            next[v] = acc & ~visited[v];
          }
          for (VertexId v = 0; v < n; ++v) {
            if (!next[v]) continue;
            moving = true;
            visited[v] |= next[v];
            if (is_holder[v] && visited[v] == full) {
              --open;
              if (level > local) {
                local = level;
                const auto src = holders[b + static_cast<std::size_t>(std::countr_zero(next[v]))].second;
                local_witness = {holders[lo].first, src, v, level};
              }
            }
          }
          std::swap(frontier, next);
        }
        if (open > 0) {
          local = kUnreachable;
          local_witness = {holders[lo].first};
          break;
        }
      }
      for (std::size_t j = lo; j < hi; ++j) is_holder[holders[j].second] = 0;
#pragma omp critical(privlabel_verify_diameter)
      if (local > worst || (local == worst && !local_witness.empty() && worst_witness.empty())) {
        worst = local;
        worst_witness = local_witness;
      }
    }
  }
  out.max_weak_diameter = worst;

  if (worst > diameter_bound) {
    std::string detail = worst == kUnreachable
                             ? "holders of label " + std::to_string(worst_witness.front()) + " are disconnected"
                             : "label " + std::to_string(worst_witness[0]) + " held by vertices " +
                                   std::to_string(worst_witness[1]) + " and " + std::to_string(worst_witness[2]) +
                                   " at distance " + std::to_string(worst_witness[3]) + " > " +
                                   std::to_string(diameter_bound);
    out.verdict = failed(name, Status::fail, std::move(detail), worst_witness);
  } else if (out.distinct_labels > label_budget) {
    out.verdict = failed(name, Status::fail,
                         std::to_string(out.distinct_labels) + " distinct labels exceed budget " +
                             std::to_string(label_budget),
                         {out.distinct_labels});
  }
  return out;
}

Verdict check_edge_proper(const Graph& g, std::span<const std::optional<std::uint64_t>> colors) {
  const char* name = "edge_proper";
  if (colors.size() != g.edge_count()) return failed(name, Status::incomplete, "color count differs from m", {});
  for (EdgeId e = 0; e < colors.size(); ++e) {
    if (!colors[e]) return failed(name, Status::incomplete, "edge " + std::to_string(e) + " is uncolored", {e});
  }
  std::vector<std::pair<std::uint64_t, EdgeId>> around;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    around.clear();
    for (EdgeId e : g.incident_edges(v)) around.emplace_back(*colors[e], e);
    std::sort(around.begin(), around.end());
    for (std::size_t j = 1; j < around.size(); ++j) {
      if (around[j].first == around[j - 1].first) {
        return failed(name, Status::fail,
                      "edges " + std::to_string(around[j - 1].second) + " and " + std::to_string(around[j].second) +
                          " meet at vertex " + std::to_string(v) + " with color " + std::to_string(around[j].first),
                      {around[j - 1].second, around[j].second});
      }
    }
  }
  return pass(name);
}

Verdict check_edge_proper(const Graph& g, std::span<const std::uint64_t> colors) {
  std::vector<std::optional<std::uint64_t>> wrapped(colors.begin(), colors.end());
  return check_edge_proper(g, wrapped);
}

Verdict check_edge_domains_disjoint(const Graph& g, const LabelDomain& domains) {
  const char* name = "edge_domains_disjoint";
  if (domains.size() != g.edge_count()) return failed(name, Status::incomplete, "domain count differs from m", {});
  for (EdgeId e = 0; e < domains.size(); ++e) {
    if (domains.domain(e).empty()) {
      return failed(name, Status::degenerate, "edge " + std::to_string(e) + " has an empty domain", {e});
    }
  }
  std::vector<std::pair<LabelValue, EdgeId>> around;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    around.clear();
    for (EdgeId e : g.incident_edges(v))
      for (LabelValue x : domains.domain(e)) around.emplace_back(x, e);
    std::sort(around.begin(), around.end());
    for (std::size_t j = 1; j < around.size(); ++j) {
      if (around[j].first == around[j - 1].first) {
        return failed(name, Status::fail,
                      "edges " + std::to_string(around[j - 1].second) + " and " + std::to_string(around[j].second) +
                          " share label " + std::to_string(around[j].first),
                      {around[j - 1].second, around[j].second, around[j].first});
      }
    }
  }
  return pass(name);
}

DefectVerdict check_edge_defect(const Graph& g, std::span<const std::uint64_t> colors, std::size_t bound) {
  DefectVerdict out{pass("edge_defect"), 0};
  std::vector<std::size_t> defect(g.edge_count(), 0);
  std::vector<std::pair<std::uint64_t, EdgeId>> around;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    around.clear();
    for (EdgeId e : g.incident_edges(v)) around.emplace_back(colors[e], e);
    std::sort(around.begin(), around.end());
    for (std::size_t lo = 0; lo < around.size();) {
      std::size_t hi = lo;
      while (hi < around.size() && around[hi].first == around[lo].first) ++hi;
      for (std::size_t j = lo; j < hi; ++j) defect[around[j].second] += hi - lo - 1;
      lo = hi;
    }
  }
  EdgeId worst = 0;
  for (EdgeId e = 0; e < defect.size(); ++e) {
    if (defect[e] > out.max_defect) {
      out.max_defect = defect[e];
      worst = e;
    }
  }
  if (out.max_defect > bound) {
    out.verdict = failed("edge_defect", Status::fail,
                         "edge " + std::to_string(worst) + " has " + std::to_string(out.max_defect) +
                             " same-colored neighbors > " + std::to_string(bound),
                         {worst});
  }
  return out;
}

Verdict check_edge_dominating(const Graph& g, std::span<const EdgeId> d) {
  const char* name = "edge_dominating";
  std::vector<char> in_d(g.edge_count(), 0);
  std::vector<char> touched(g.vertex_count(), 0);
  for (EdgeId e : d) {
    if (e >= g.edge_count()) return failed(name, Status::fail, "edge id out of range", {e});
    in_d[e] = 1;
    touched[g.edge(e).u] = touched[g.edge(e).v] = 1;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in_d[e] && !touched[g.edge(e).u] && !touched[g.edge(e).v]) {
      return failed(name, Status::fail, "edge " + std::to_string(e) + " has no neighbor in D", {e});
    }
  }
  return pass(name);
}

Verdict check_matching(const Graph& g, std::span<const EdgeId> matching) {
  const char* name = "matching";
  std::vector<std::int64_t> owner(g.vertex_count(), -1);
  for (EdgeId e : matching) {
    if (e >= g.edge_count()) return failed(name, Status::fail, "edge id out of range", {e});
    for (VertexId x : {g.edge(e).u, g.edge(e).v}) {
      if (owner[x] >= 0) {
        return failed(name, Status::fail,
                      "edges " + std::to_string(owner[x]) + " and " + std::to_string(e) + " share vertex " +
                          std::to_string(x),
                      {static_cast<std::uint64_t>(owner[x]), e});
      }
      owner[x] = e;
    }
  }
  return pass(name);
}

Verdict check_maximal_matching(const Graph& g, std::span<const EdgeId> matching) {
  Verdict base = check_matching(g, matching);
  base.name = "maximal_matching";
  if (!base.ok()) return base;
  std::vector<char> matched(g.vertex_count(), 0);
  for (EdgeId e : matching) matched[g.edge(e).u] = matched[g.edge(e).v] = 1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!matched[g.edge(e).u] && !matched[g.edge(e).v]) {
      return failed("maximal_matching", Status::fail, "edge " + std::to_string(e) + " could be added", {e});
    }
  }
  return base;
}

MetricsReport metrics(const LabelDomain& domains, std::uint64_t declared_palette, std::size_t rounds) {
  MetricsReport r;
  r.problem_domain_size = declared_palette;
  r.rounds = rounds;
  std::vector<std::size_t> sizes;
  sizes.reserve(domains.size());
  for (const auto& d : domains.domains()) sizes.push_back(d.size());
  if (sizes.empty()) return r;
  std::sort(sizes.begin(), sizes.end());
  r.solution_domain_min = sizes.front();
  r.solution_domain_max = sizes.back();
  const std::size_t mid = sizes.size() / 2;
  r.solution_domain_median = sizes.size() % 2 ? static_cast<double>(sizes[mid])
                                              : (static_cast<double>(sizes[mid - 1]) + static_cast<double>(sizes[mid])) / 2.0;
  if (r.solution_domain_min > 0) {
    r.contingency_factor = static_cast<double>(declared_palette) / static_cast<double>(r.solution_domain_min);
  }
  return r;
}

}  // namespace privlabel::verify
