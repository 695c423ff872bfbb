#include <benchmark/benchmark.h>

#include "cvdj/specfun.hpp"

namespace {

void BM_ErfSeries(benchmark::State& state) {
  cvdj::Complex z{0.7, 1.1};
  for (auto _ : state) benchmark::DoNotOptimize(cvdj::erf_complex(z));
}
BENCHMARK(BM_ErfSeries);

void BM_ErfFaddeeva(benchmark::State& state) {
  cvdj::Complex z{3.5, -2.0};
  for (auto _ : state) benchmark::DoNotOptimize(cvdj::erf_complex(z));
}
BENCHMARK(BM_ErfFaddeeva);

void BM_ErfScaled(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cvdj::erf_scaled(0.75, x, 1.67));
}
BENCHMARK(BM_ErfScaled)->Arg(0)->Arg(4)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
