#include <benchmark/benchmark.h>

#include "gravotto/cycle.hpp"
#include "gravotto/montecarlo.hpp"
#include "gravotto/sweep.hpp"

namespace {

const gravotto::CycleParams kScenario{gravotto::ReissnerNordstrom{2.0, 0.0},
                                      gravotto::Station{10.0},
                                      gravotto::Station{2.5},
                                      1.0,
                                      1.5,
                                      1.0};

void BM_RedshiftFactor(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gravotto::redshift_factor(
        kScenario.metric, kScenario.alice, kScenario.bob));
  }
}
BENCHMARK(BM_RedshiftFactor);

void BM_RunCycle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gravotto::run_cycle(kScenario));
  }
}
BENCHMARK(BM_RunCycle);

void BM_SimulateCycles(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gravotto::simulate_cycles(kScenario, n, 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateCycles)->Range(1 << 10, 1 << 20);

void BM_RnBoundCurves(benchmark::State& state) {
  const std::vector<double> offsets = {0.2, 1.0, 2.0, 4.0};
  std::vector<double> separations =
      gravotto::log_spaced_grid(1e-2, 1e2, state.range(0));
  for (double& dr : separations) dr *= 2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        gravotto::rn_bound_curves(2.0, 0.0, offsets, separations));
  }
}
BENCHMARK(BM_RnBoundCurves)->Arg(200);

}  // namespace

int main(int argc, char** argv) {
  ::benchmark::Initialize(&argc, argv);
  if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  ::benchmark::RunSpecifiedBenchmarks();
  ::benchmark::Shutdown();
  return 0;
}
