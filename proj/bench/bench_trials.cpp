// Serial reference against the OpenMP trial loop on the same requests.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "sixcircles/harness.hpp"

using namespace sixcircles;

namespace {

TrialRequest request(IdentityId id, int width) {
  TrialRequest r{id, default_sampler(info(id), 1), 2000, {width}};
  return r;
}

void BM_Serial(benchmark::State& state) {
  const auto req = request(static_cast<IdentityId>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials_serial(req));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(req.n));
}

void BM_Parallel(benchmark::State& state) {
  const auto req = request(static_cast<IdentityId>(state.range(0)), static_cast<int>(state.range(1)));
  const int threads = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials(req, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(req.n));
}

void args(benchmark::internal::Benchmark* b, bool threaded) {
  for (IdentityId id : {IdentityId::THM_6_3, IdentityId::THM_8_4}) {
    for (int w : {53, 113}) {
      if (!threaded) {
        b->Args({static_cast<int>(id), w});
        continue;
      }
      for (int t = 1; t <= omp_get_max_threads(); t *= 2) b->Args({static_cast<int>(id), w, t});
    }
  }
}

}  // namespace

BENCHMARK(BM_Serial)->Apply([](auto* b) { args(b, false); })->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Parallel)->Apply([](auto* b) { args(b, true); })->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
