#include <benchmark/benchmark.h>

#include "graphex/measures.hpp"
#include "graphex/multigraphex.hpp"
#include "graphex/rng.hpp"

using namespace graphex;

namespace {

void BM_RankOneSampler(benchmark::State& state) {
  Multigraphex wx(RankOne{DiscreteMeasure::from_atoms({{1.0, 0.5}}), 0.5});
  Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_gp(wx, 1.0, rng));
  }
}
BENCHMARK(BM_RankOneSampler);

void BM_SampleCrm(benchmark::State& state) {
  DiscreteMeasure rho = DiscreteMeasure::from_atoms({{0.01, 50.0}, {1.0, 0.5}});
  Rng rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_crm(rho, 0.5, 1.0, rng));
  }
}
BENCHMARK(BM_SampleCrm);

void BM_TailInverse(benchmark::State& state) {
  std::vector<DiscreteMeasure::Atom> atoms;
  Rng setup(3);
  for (int i = 0; i < 64; ++i) atoms.push_back({0.01 + setup.uniform(), 0.1 + setup.uniform()});
  DiscreteMeasure rho = DiscreteMeasure::from_atoms(std::move(atoms));
  Rng rng(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tail_inverse(rho, rng.uniform(0.0, rho.total_mass())));
  }
}
BENCHMARK(BM_TailInverse);

}  // namespace
