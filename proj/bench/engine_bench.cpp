// Serial reference engine against the OpenMP engine on the same runs.
// Second argument of the engine benchmarks: 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <string>

#include "privlabel/coloring.hpp"
#include "privlabel/decomposition.hpp"
#include "privlabel/edge_coloring.hpp"
#include "privlabel/generate.hpp"
#include "privlabel/verify.hpp"

using namespace privlabel;

namespace {

Graph gnp(std::size_t n, double avg_degree, std::size_t dmax) {
  return generate(parse_generator_spec("gnp:n=" + std::to_string(n) + ",p=" +
                                       std::to_string(avg_degree / static_cast<double>(n)) +
                                       ",dmax=" + std::to_string(dmax) + ",seed=1"))
      .graph;
}

sim::RunOptions options(const benchmark::State& state) {
  sim::RunOptions o;
  o.seed = 42;
  o.execution = state.range(1) == 0 ? sim::Execution::serial : sim::Execution::parallel;
  return o;
}

void BM_RandomColoring(benchmark::State& state) {
  const Graph g = gnp(static_cast<std::size_t>(state.range(0)), 8.0, 20);
  const auto opt = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(generic_random_coloring(g, 4.0, opt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Delta2Coloring(benchmark::State& state) {
  const Graph g = gnp(static_cast<std::size_t>(state.range(0)), 6.0, 10);
  const auto opt = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(generic_delta2_coloring(g, opt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LinialSaks(benchmark::State& state) {
  const Graph g = gnp(static_cast<std::size_t>(state.range(0)), 4.0, 64);
  const auto opt = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(linial_saks(g, opt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_KuhnEdge(benchmark::State& state) {
  const Graph g = gnp(static_cast<std::size_t>(state.range(0)), 16.0, 32);
  const auto opt = options(state);
  for (auto _ : state) benchmark::DoNotOptimize(kuhn_defective_edge_coloring(g, 2, opt));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}

void BM_DisjointnessCheck(benchmark::State& state) {
  const Graph g = gnp(static_cast<std::size_t>(state.range(0)), 8.0, 20);
  sim::RunOptions opt;
  opt.seed = 42;
  const auto run = generic_random_coloring(g, 4.0, opt);
  for (auto _ : state) benchmark::DoNotOptimize(verify::check_domains_disjoint(g, run.domains));
}

void sizes(benchmark::internal::Benchmark* b, std::int64_t lo, std::int64_t hi) {
  for (std::int64_t n = lo; n <= hi; n *= 4)
    for (std::int64_t policy : {0, 1}) b->Args({n, policy});
  b->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_RandomColoring)->Apply([](auto* b) { sizes(b, 1 << 12, 1 << 16); });
BENCHMARK(BM_Delta2Coloring)->Apply([](auto* b) { sizes(b, 1 << 12, 1 << 16); });
BENCHMARK(BM_LinialSaks)->Apply([](auto* b) { sizes(b, 1 << 10, 1 << 14); });
BENCHMARK(BM_KuhnEdge)->Apply([](auto* b) { sizes(b, 1 << 12, 1 << 16); });
BENCHMARK(BM_DisjointnessCheck)->Apply([](auto* b) {
  b->Arg(1 << 12)->Arg(1 << 16)->ArgName("n")->Unit(benchmark::kMillisecond);
});

BENCHMARK_MAIN();
