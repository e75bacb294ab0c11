#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "privlabel/graph.hpp"

namespace privlabel {

enum class GeneratorKind { clique, path, random_tree, gnp, forest_union };

/// Parameters for the synthetic graph families.
///
/// `max_degree` (0 = uncapped) applies to random-tree and gnp: a candidate
/// edge that would push either endpoint past the cap is skipped.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::gnp;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t forests = 1;
  std::size_t max_degree = 0;
  std::uint64_t seed = 0;
};

struct GeneratedGraph {
  Graph graph;
  /// Generating forests for forest-union (empty for other kinds).
  std::vector<std::vector<Edge>> forests;
  /// Construction arboricity bound, known for forest-union, path and trees.
  std::optional<std::size_t> arboricity;
};

GeneratedGraph generate(const GeneratorSpec& spec);

/// Parses "kind:key=value,..." e.g. "gnp:n=1024,p=0.008,seed=7" or
/// "forest-union:n=100,a=2". Keys: n, p, a, dmax, seed.
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(const GeneratorSpec& spec);
std::string_view to_string(GeneratorKind kind);

}  // namespace privlabel
