#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "freefam/freefam.hpp"

namespace {

std::vector<double> random_values(std::size_t n, unsigned seed) {
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> out(n);
  for (double& x : out) x = dist(engine);
  return out;
}

void BM_Revert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto c = random_values(n + 1, 1);
  c[0] = 0.0;
  c[1] = 1.0;
  const freefam::TruncatedSeries f(c, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(freefam::revert(f));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Revert)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_CumulantsFromVariance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const freefam::RationalVarianceFunction v({1.0, 0.5, 0.25}, {1.0, -0.2}, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(freefam::cumulants_from_variance(v, n));
  }
}
BENCHMARK(BM_CumulantsFromVariance)->RangeMultiplier(2)->Range(8, 128);

void BM_MomentsRecursion(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const freefam::CumulantSequence c(random_values(n, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(freefam::moments_from_cumulants(c));
  }
}
BENCHMARK(BM_MomentsRecursion)->DenseRange(4, 12, 4)->Arg(64)->Arg(256);

void BM_MomentsEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const freefam::CumulantSequence c(random_values(n, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(freefam::moments_via_nc_oracle(c, n));
  }
}
BENCHMARK(BM_MomentsEnumeration)->DenseRange(4, 12, 4);

void BM_QuadratureMoment(benchmark::State& state) {
  const auto nu = freefam::meixner_measure({1.0, 0.5}, freefam::ArcsineQuadrature(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(freefam::measure_moment(nu, 8));
  }
}
BENCHMARK(BM_QuadratureMoment)->Arg(200)->Arg(2000)->Arg(20000);

void BM_AdmissibilityReport(benchmark::State& state) {
  const freefam::RationalVarianceFunction v({1.0, -1.0}, {1.0, 1.0}, 0.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(freefam::admissibility_report(v));
  }
}
BENCHMARK(BM_AdmissibilityReport);

}  // namespace

BENCHMARK_MAIN();
