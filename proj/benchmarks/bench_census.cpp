#include <benchmark/benchmark.h>

#include "graphex/census.hpp"
#include "graphex/generators.hpp"
#include "graphex/rng.hpp"
#include "graphex/sampling.hpp"

using namespace graphex;

namespace {

void BM_CanonicalKeySmall(benchmark::State& state) {
  // Typical sampled subgraph: a few vertices, mixed multiplicities.
  Multigraph g(4, {{0, 1, 2}, {1, 2, 1}, {3, 3, 1}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_key(g));
  }
}
BENCHMARK(BM_CanonicalKeySmall);

void BM_CanonicalKeyWorstCase(benchmark::State& state) {
  // Regular graph: the degree invariant cannot split the vertices.
  uint32_t n = static_cast<uint32_t>(state.range(0));
  std::vector<Edge> edges;
  for (uint32_t v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, 1});
  Multigraph cycle(n, std::move(edges));
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_key(cycle));
  }
}
BENCHMARK(BM_CanonicalKeyWorstCase)->Arg(7)->Arg(9);

void BM_SampleAndCensus(benchmark::State& state) {
  std::vector<uint32_t> degs(5050, 1);
  std::fill(degs.begin(), degs.begin() + 50, 100);
  DegreeSequence d(degs);
  Rng rng(5);
  for (auto _ : state) {
    Census c;
    for (int rep = 0; rep < 100; ++rep) {
      Multigraph g = configuration_model(d, rng);
      c.add(canonical_sample(g, 1.0, rng));
    }
    benchmark::DoNotOptimize(c.total());
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_SampleAndCensus)->Unit(benchmark::kMillisecond);

}  // namespace
