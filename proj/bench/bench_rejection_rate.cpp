#include <benchmark/benchmark.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rpgauss/simulation.hpp"

using namespace rpgauss;

namespace {

RateRequest request(const char* test, std::size_t n) {
  RateRequest req;
  req.process = ArSpec{0.5, InnovationFamily::StudentT10, n, 1000};
  req.test = *parse_test(test);
  req.reps = 64;
  req.seed = 1;
  return req;
}

void BM_RateSerial(benchmark::State& state, const char* test) {
  const RateRequest req = request(test, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rejection_rate_serial(req).rate);
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(req.reps));
}

void BM_RateParallel(benchmark::State& state, const char* test) {
  const RateRequest req = request(test, static_cast<std::size_t>(state.range(0)));
#ifdef _OPENMP
  state.counters["threads"] = omp_get_max_threads();
#endif
  for (auto _ : state) benchmark::DoNotOptimize(rejection_rate(req).rate);
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(req.reps));
}

}  // namespace

BENCHMARK_CAPTURE(BM_RateSerial, G, "G")->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_RateParallel, G, "G")->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_RateSerial, RP, "RP")->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_RateParallel, RP, "RP")->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
