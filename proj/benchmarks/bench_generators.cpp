#include <benchmark/benchmark.h>

#include "graphex/generators.hpp"
#include "graphex/rng.hpp"

using namespace graphex;

namespace {

std::vector<uint32_t> two_block_degrees(uint32_t hubs, uint32_t hub_degree, uint32_t leaves) {
  std::vector<uint32_t> d(hubs + leaves, 1);
  std::fill(d.begin(), d.begin() + hubs, hub_degree);
  return d;
}

void BM_ConfigurationModel(benchmark::State& state) {
  uint32_t leaves = static_cast<uint32_t>(state.range(0));
  DegreeSequence d(two_block_degrees(leaves / 100, 100, leaves));
  Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(configuration_model(d, rng));
  }
  state.SetItemsProcessed(state.iterations() * d.half_edge_sum());
}
BENCHMARK(BM_ConfigurationModel)->Arg(5000)->Arg(50000);

void BM_PreferentialAttachment(benchmark::State& state) {
  uint64_t m = static_cast<uint64_t>(state.range(0));
  std::vector<double> delta(2 * m / 1000 + 10, 1.0);
  WeightSequence w(delta);
  Rng rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(preferential_attachment(w, m, rng));
  }
  state.SetItemsProcessed(state.iterations() * m);
}
BENCHMARK(BM_PreferentialAttachment)->Arg(5000)->Arg(50000);

void BM_GrgSkipping(benchmark::State& state) {
  auto degs = two_block_degrees(50, 100, static_cast<uint32_t>(state.range(0)));
  std::vector<double> w(degs.begin(), degs.end());
  WeightSequence ws(w);
  Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generalized_random_graph(ws, rng, GrgMethod::kSkipping));
  }
}
BENCHMARK(BM_GrgSkipping)->Arg(5000)->Arg(20000);

void BM_Bipartite(benchmark::State& state) {
  std::vector<uint32_t> side(static_cast<uint32_t>(state.range(0)), 2);
  BipartiteDegrees d(side, side);
  Rng rng(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bipartite_configuration_model(d, rng));
  }
}
BENCHMARK(BM_Bipartite)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
