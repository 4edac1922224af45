// Serial versus OpenMP trial runners on the Monte Carlo kernels.

#include <benchmark/benchmark.h>

#include "tabdyn/corner_growth.hpp"
#include "tabdyn/jdt.hpp"
#include "tabdyn/rsk.hpp"
#include "tabdyn/trials.hpp"

namespace {

using namespace tabdyn;

// Angle of the lazy jeu de taquin path after n growth steps.
double theta_trial(std::int64_t t, std::int64_t n) {
  Rng rng(1, static_cast<std::uint64_t>(t));
  StreamingRecorder rec;
  NaturalParamTracker q;
  for (std::int64_t k = 0; k < n; ++k) q.push(rec.push(rng.uniform()));
  return box_angle(q.current());
}

// Competition interface angle after `steps` steps.
double phi_trial(std::int64_t t, int steps) {
  Rng rng(2, static_cast<std::uint64_t>(t));
  LastPassageGrid grid(rng);
  return box_angle(follow_interface(grid, steps).back());
}

void BM_ThetaSerial(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(run_trials_serial(64, [n](std::int64_t t) { return theta_trial(t, n); }));
  state.SetItemsProcessed(state.iterations() * 64);
}

void BM_ThetaParallel(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        run_trials_parallel(64, [n](std::int64_t t) { return theta_trial(t, n); }));
  state.SetItemsProcessed(state.iterations() * 64);
}

void BM_PhiSerial(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        run_trials_serial(64, [steps](std::int64_t t) { return phi_trial(t, steps); }));
  state.SetItemsProcessed(state.iterations() * 64);
}

void BM_PhiParallel(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        run_trials_parallel(64, [steps](std::int64_t t) { return phi_trial(t, steps); }));
  state.SetItemsProcessed(state.iterations() * 64);
}

}  // namespace

BENCHMARK(BM_ThetaSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PhiSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiParallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
