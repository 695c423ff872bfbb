#include <benchmark/benchmark.h>

#include "cvdj/dominance.hpp"

namespace {

void BM_DominantString(benchmark::State& state) {
  const cvdj::EncodingParams params(static_cast<int>(state.range(0)), 1.0, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(cvdj::dominant_string(1.3, params));
}
BENCHMARK(BM_DominantString)->Arg(4)->Arg(8)->Arg(12);

void BM_VerifyDominance(benchmark::State& state) {
  const cvdj::EncodingParams params(8, 1.0, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(cvdj::verify_dominance(params, 4.0, 201));
}
BENCHMARK(BM_VerifyDominance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
