#include "privlabel/generate.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "privlabel/random_stream.hpp"

namespace privlabel {

namespace {

constexpr std::uint64_t kGeneratorSalt = 0x67656E6572617465ull;  // "generate"

std::vector<Edge> gnp_edges(std::size_t n, double p, std::size_t cap, RandomStream& rng) {
  std::vector<Edge> out;
  if (n < 2 || p <= 0.0) return out;
  std::vector<std::size_t> degree(n, 0);
  auto accept = [&](std::size_t a, std::size_t b) {
    if (cap != 0 && (degree[a] >= cap || degree[b] >= cap)) return;
    ++degree[a];
    ++degree[b];
    out.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
  };
  if (p >= 1.0) {
    for (std::size_t b = 1; b < n; ++b)
      for (std::size_t a = 0; a < b; ++a) accept(a, b);
    return out;
  }
  // Geometric skipping over the pairs (a, b), a < b, in column order.
  const double log_q = std::log1p(-p);
  std::int64_t b = 1;
  std::int64_t a = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (b < nn) {
    const double r = rng.uniform01();
    a += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (a >= b && b < nn) {
      a -= b;
      ++b;
    }
    if (b < nn) accept(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  return out;
}

std::vector<Edge> random_tree_edges(std::size_t n, std::size_t cap, RandomStream& rng) {
  std::vector<Edge> out;
  if (n < 2) return out;
  if (cap == 1 && n > 2) throw std::invalid_argument("random-tree: dmax=1 admits at most 2 vertices");
  std::vector<std::size_t> degree(n, 0);
  std::vector<VertexId> available{0};
  for (VertexId i = 1; i < n; ++i) {
    const std::size_t slot = static_cast<std::size_t>(rng.uniform(available.size()));
    const VertexId parent = available[slot];
    out.push_back({parent, i});
    ++degree[parent];
    ++degree[i];
    if (cap != 0 && degree[parent] >= cap) {
      available[slot] = available.back();
      available.pop_back();
    }
    if (cap == 0 || degree[i] < cap) available.push_back(i);
  }
  return out;
}

std::vector<Edge> random_spanning_tree(std::size_t n, RandomStream& rng) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  rng.shuffle(std::span<VertexId>(order));
  std::vector<Edge> out;
  for (std::size_t i = 1; i < n; ++i) {
    const VertexId parent = order[rng.uniform(i)];
    out.push_back({parent, order[i]});
  }
  return out;
}

}  // namespace

GeneratedGraph generate(const GeneratorSpec& spec) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
    throw std::invalid_argument("generator parameter p must lie in [0,1]");
  }
  if (spec.n > 0xFFFFFFF0ull) throw std::invalid_argument("generator parameter n too large");
  RandomStream rng(spec.seed, kGeneratorSalt);
  GeneratedGraph out;
  std::vector<Edge> edges;
  const std::size_t n = spec.n;
  switch (spec.kind) {
    case GeneratorKind::clique:
      for (VertexId b = 1; b < n; ++b)
        for (VertexId a = 0; a < b; ++a) edges.push_back({a, b});
      if (n >= 2) out.arboricity = (n + 1) / 2;
      break;
    case GeneratorKind::path:
      for (VertexId a = 1; a < n; ++a) edges.push_back({a - 1, a});
      out.arboricity = 1;
      break;
    case GeneratorKind::random_tree:
      edges = random_tree_edges(n, spec.max_degree, rng);
      out.arboricity = 1;
      break;
    case GeneratorKind::gnp:
      edges = gnp_edges(n, spec.p, spec.max_degree, rng);
      break;
    case GeneratorKind::forest_union:
      if (spec.forests == 0) throw std::invalid_argument("forest-union needs a >= 1");
      for (std::size_t f = 0; f < spec.forests; ++f) {
        out.forests.push_back(random_spanning_tree(n, rng));
        edges.insert(edges.end(), out.forests.back().begin(), out.forests.back().end());
      }
      out.arboricity = spec.forests;
      break;
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::clique: return "clique";
    case GeneratorKind::path: return "path";
    case GeneratorKind::random_tree: return "random-tree";
    case GeneratorKind::gnp: return "gnp";
    case GeneratorKind::forest_union: return "forest-union";
  }
  return "?";
}

namespace {

std::uint64_t parse_uint(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw std::invalid_argument("generator key '" + std::string(key) + "' needs a non-negative integer");
  }
  return out;
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  const std::size_t colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  if (kind == "clique") spec.kind = GeneratorKind::clique;
  else if (kind == "path") spec.kind = GeneratorKind::path;
  else if (kind == "random-tree") spec.kind = GeneratorKind::random_tree;
  else if (kind == "gnp") spec.kind = GeneratorKind::gnp;
  else if (kind == "forest-union") spec.kind = GeneratorKind::forest_union;
  else throw std::invalid_argument("unknown generator kind '" + std::string(kind) + "'");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("generator item '" + std::string(item) + "' lacks '='");
    const std::string_view key = item.substr(0, eq);
    const std::string_view val = item.substr(eq + 1);
    if (key == "n") spec.n = parse_uint(key, val);
    else if (key == "a") spec.forests = parse_uint(key, val);
    else if (key == "dmax") spec.max_degree = parse_uint(key, val);
    else if (key == "seed") spec.seed = parse_uint(key, val);
    else if (key == "p") {
      try {
        std::size_t used = 0;
        spec.p = std::stod(std::string(val), &used);
        if (used != val.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw std::invalid_argument("generator key 'p' needs a real number");
      }
    } else {
      throw std::invalid_argument("unknown generator key '" + std::string(key) + "'");
    }
  }
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("generator parameter p must lie in [0,1]");
  return spec;
}

std::string to_string(const GeneratorSpec& spec) {
  std::string out(to_string(spec.kind));
  out += ":n=" + std::to_string(spec.n);
  if (spec.kind == GeneratorKind::gnp) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, spec.p);
    out += ",p=";
    out.append(buf, res.ptr);
  }
  if (spec.kind == GeneratorKind::forest_union) out += ",a=" + std::to_string(spec.forests);
  if (spec.max_degree != 0) out += ",dmax=" + std::to_string(spec.max_degree);
  out += ",seed=" + std::to_string(spec.seed);
  return out;
}

}  // namespace privlabel
