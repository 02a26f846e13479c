#include <benchmark/benchmark.h>

#include "schurid/identity.hpp"
#include "schurid/measures.hpp"
#include "schurid/schur.hpp"

using namespace schurid;

static void BM_LrCoefficient(benchmark::State& state) {
  const Partition lambda{6, 4, 3, 2, 1}, mu{4, 2, 1}, nu{3, 3, 2};
  for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(lambda, mu, nu));
}
BENCHMARK(BM_LrCoefficient);

static void BM_VerifyTheorem1(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem1(1, 2, 1L, degree).checked);
}
BENCHMARK(BM_VerifyTheorem1)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BesselDeterminant(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normalization_Z_bessel(size, size, 2).value_double());
}
BENCHMARK(BM_BesselDeterminant)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
