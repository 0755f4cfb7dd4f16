#include <benchmark/benchmark.h>

#include "landauer/bounds.hpp"
#include "landauer/maxcool.hpp"
#include "landauer/spectra.hpp"
#include "landauer/thermo.hpp"

namespace {

using namespace landauer;

void BM_MaxCoolSorted(benchmark::State& state) {
  const auto bath = engineered_interacting({state.range(0), 3.0, 1.0});
  const SystemDiag system = maximally_mixed_qubit();
  for (auto _ : state) {
    auto res = max_cool(system, bath, 1.0, FillPolicy::sorted);
    benchmark::DoNotOptimize(res.outcome.sigma);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxCoolSorted)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_MaxCoolLevelShift(benchmark::State& state) {
  const auto bath = engineered_interacting({state.range(0), 3.0, 1.0});
  const SystemDiag system = maximally_mixed_qubit();
  for (auto _ : state) {
    auto res = max_cool(system, bath, 1.0, FillPolicy::level_shift);
    benchmark::DoNotOptimize(res.outcome.sigma);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxCoolLevelShift)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_GibbsEntropy(benchmark::State& state) {
  const auto bath = engineered_interacting({state.range(0), 3.0, 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(entropy(gibbs(bath.spectrum, 1.0)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GibbsEntropy)->RangeMultiplier(8)->Range(64, 32768)->Complexity();

void BM_HeatCapacity(benchmark::State& state) {
  const auto bath = engineered_interacting({1024, 3.0, 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(heat_capacity(bath.spectrum, 1.01));
  }
}
BENCHMARK(BM_HeatCapacity);

void BM_MinRelativeEntropy(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_relative_entropy(0.3, 2));
  }
}
BENCHMARK(BM_MinRelativeEntropy);

}  // namespace

BENCHMARK_MAIN();
