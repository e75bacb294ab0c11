#include "privlabel/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace privlabel {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") references a vertex >= n=" + std::to_string(n));
    }
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.max_degree_ = std::max(g.max_degree_, degree[v]);
  }
  g.adjacency_.resize(2 * g.edges_.size());
  g.incident_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_);
  // Lower-ID neighbors arrive as `v` and higher-ID neighbors as `u`, so the
  // two runs interleave; a per-vertex sort restores ID order.
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    g.adjacency_[cursor[e.u]] = e.v;
    g.incident_[cursor[e.u]++] = id;
    g.adjacency_[cursor[e.v]] = e.u;
    g.incident_[cursor[e.v]++] = id;
  }
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t lo = g.offsets_[v];
    const std::size_t hi = g.offsets_[v + 1];
    std::vector<std::pair<VertexId, EdgeId>> tmp;
    tmp.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) tmp.emplace_back(g.adjacency_[i], g.incident_[i]);
    std::sort(tmp.begin(), tmp.end());
    for (std::size_t i = lo; i < hi; ++i) {
      g.adjacency_[i] = tmp[i - lo].first;
      g.incident_[i] = tmp[i - lo].second;
    }
  }
  return g;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a >= vertex_count() || b >= vertex_count()) return std::nullopt;
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
}

Orientation::Orientation(const Graph& g, std::vector<VertexId> source_of_edge)
    : source_(std::move(source_of_edge)) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (source_.size() != m) {
    throw std::invalid_argument("orientation needs one source per edge");
  }
  target_.resize(m);
  std::vector<std::size_t> outdeg(n, 0), indeg(n, 0);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    if (source_[e] != ed.u && source_[e] != ed.v) {
      throw std::invalid_argument("orientation source is not an endpoint of edge " +
                                  std::to_string(e));
    }
    target_[e] = source_[e] == ed.u ? ed.v : ed.u;
    ++outdeg[source_[e]];
    ++indeg[target_[e]];
  }
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    out_offsets_[v + 1] = out_offsets_[v] + outdeg[v];
    in_offsets_[v + 1] = in_offsets_[v] + indeg[v];
  }
  out_.resize(m);
  out_edges_.resize(m);
  in_.resize(m);
  // Walk adjacency lists so per-vertex lists come out sorted by neighbor ID.
  for (VertexId v = 0; v < n; ++v) {
    std::size_t o = out_offsets_[v];
    std::size_t i = in_offsets_[v];
    auto nb = g.neighbors(v);
    auto inc = g.incident_edges(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (source_[inc[k]] == v) {
        out_[o] = nb[k];
        out_edges_[o++] = inc[k];
      } else {
        in_[i++] = nb[k];
      }
    }
  }

  // Kahn's algorithm on the directed graph.
  std::vector<std::size_t> remaining_in = indeg;
  std::queue<VertexId> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (remaining_in[v] == 0) ready.push(v);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    VertexId v = ready.front();
    ready.pop();
    ++visited;
    for (VertexId w : out_neighbors(v)) {
      if (--remaining_in[w] == 0) ready.push(w);
    }
  }
  acyclic_ = visited == n;
}

std::size_t Orientation::max_out_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) best = std::max(best, out_degree(static_cast<VertexId>(v)));
  return best;
}

Orientation orient_by_id(const Graph& g) {
  std::vector<VertexId> src(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) src[e] = g.edge(e).u;
  return Orientation(g, std::move(src));
}

Orientation orient_forest(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr VertexId kUnseen = static_cast<VertexId>(-1);
  std::vector<VertexId> parent(n, kUnseen);
  std::vector<VertexId> src(g.edge_count(), kUnseen);
  for (VertexId root = 0; root < n; ++root) {
    if (parent[root] != kUnseen) continue;
    parent[root] = root;
    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      auto nb = g.neighbors(v);
      auto inc = g.incident_edges(v);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        const VertexId w = nb[k];
        if (w == parent[v] && src[inc[k]] != kUnseen) continue;
        if (parent[w] != kUnseen) {
          throw std::invalid_argument("graph is not a forest: cycle through edge (" +
                                      std::to_string(v) + "," + std::to_string(w) + ")");
        }
        parent[w] = v;
        src[inc[k]] = w;
        q.push(w);
      }
    }
  }
  return Orientation(g, std::move(src));
}

LineGraph line_graph(const Graph& g) {
  std::vector<Edge> ledges;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        ledges.push_back({inc[a], inc[b]});
      }
    }
  }
  LineGraph lg;
  lg.graph = Graph::from_edges(g.edge_count(), ledges);
  lg.vertex_of_edge.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) lg.vertex_of_edge[e] = e;
  return lg;
}

namespace {

bool parse_u64(std::string_view tok, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> header_n;
  std::vector<Edge> edges;
  std::uint64_t max_id = 0;
  bool any_edge = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#' || toks[0][0] == '%') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (toks[0] == "p") {
      std::uint64_t n = 0, m = 0;
      if (toks.size() != 3 || !parse_u64(toks[1], n) || !parse_u64(toks[2], m)) {
        throw std::invalid_argument(where + "malformed header, expected 'p <n> <m>'");
      }
      if (header_n || any_edge) throw std::invalid_argument(where + "header must come first");
      header_n = n;
      continue;
    }
    std::uint64_t u = 0, v = 0;
    if (toks.size() != 2 || !parse_u64(toks[0], u) || !parse_u64(toks[1], v)) {
      throw std::invalid_argument(where + "expected two non-negative integers");
    }
    if (u == v) throw std::invalid_argument(where + "self-loop at vertex " + std::to_string(u));
    if (header_n && (u >= *header_n || v >= *header_n)) {
      throw std::invalid_argument(where + "vertex ID >= n=" + std::to_string(*header_n));
    }
    if (u > 0xFFFFFFFEull || v > 0xFFFFFFFEull) throw std::invalid_argument(where + "vertex ID too large");
    max_id = std::max({max_id, u, v});
    any_edge = true;
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    if (nl == text.size()) break;
  }
  const std::size_t n = header_n ? *header_n : (any_edge ? max_id + 1 : 0);
  return Graph::from_edges(n, edges);
}

Graph load_edge_list(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_edge_list(ss.str());
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
  return load_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace privlabel
