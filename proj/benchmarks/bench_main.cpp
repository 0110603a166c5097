#include <benchmark/benchmark.h>

#include "trikit/diagram.hpp"
#include "trikit/ribbon.hpp"
#include "trikit/tripar.hpp"

using namespace trikit;

static void BM_BandedDeterminant(benchmark::State& state) {
  const auto bands = kn_presentation(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(banded_determinant(bands));
}
BENCHMARK(BM_BandedDeterminant)->RangeMultiplier(4)->Range(1, 256);

static void BM_BareissDeterminant(benchmark::State& state) {
  const auto m = build_matrix(kn_presentation(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_determinant(m));
}
BENCHMARK(BM_BareissDeterminant)->RangeMultiplier(4)->Range(1, 64);

static void BM_AlexanderFamily(benchmark::State& state) {
  for (auto _ : state) {
    for (std::int64_t n = 1; n <= 50; ++n) benchmark::DoNotOptimize(alexander_from_bands(kn_presentation(n)));
  }
}
BENCHMARK(BM_AlexanderFamily);

static void BM_AdmissibleTuples(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(admissible_tuples(1, g, true));
}
BENCHMARK(BM_AdmissibleTuples)->RangeMultiplier(4)->Range(4, 1024);

static void BM_ValidateStdDiagram(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const auto d = std_diagram({g, g, 0, g + 1});
  for (auto _ : state) benchmark::DoNotOptimize(validate(d));
}
BENCHMARK(BM_ValidateStdDiagram)->RangeMultiplier(2)->Range(2, 32);
BENCHMARK_MAIN();
