#include <benchmark/benchmark.h>

#include "cvdj/measure.hpp"
#include "cvdj/optimize.hpp"

namespace {

const cvdj::EncodingParams kParams(8, 1.0, 1.67);

void BM_DetectionProbability(benchmark::State& state) {
  const cvdj::WaveSpec spec(cvdj::canonical(cvdj::StringClass::AntisymBalanced, 8).first, kParams);
  for (auto _ : state) benchmark::DoNotOptimize(cvdj::detection_probability(spec, 2.01));
}
BENCHMARK(BM_DetectionProbability);

void BM_Separations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cvdj::separations(kParams, 2.01));
}
BENCHMARK(BM_Separations);

void BM_TotalProbabilities(benchmark::State& state) {
  const auto strings = cvdj::enumerate_balanced(8);
  for (auto _ : state) benchmark::DoNotOptimize(cvdj::total_probabilities(kParams, strings));
}
BENCHMARK(BM_TotalProbabilities)->Unit(benchmark::kMillisecond);

void BM_FindOptimum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cvdj::find_optimum());
}
BENCHMARK(BM_FindOptimum)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
