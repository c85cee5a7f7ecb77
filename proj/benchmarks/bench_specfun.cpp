#include <benchmark/benchmark.h>

#include "oqbm/specfun.hpp"

using namespace oqbm;

static void BM_Erfc(benchmark::State& state) {
  double x = -5.0, acc = 0.0;
  for (auto _ : state) {
    acc += specfun::erfc(x);
    x = x > 25.0 ? -5.0 : x + 0.013;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_Erfc);

static void BM_BesselJ0(benchmark::State& state) {
  double z = 0.0, acc = 0.0;
  for (auto _ : state) {
    acc += specfun::bessel_j0(z);
    z = z > 200.0 ? 0.0 : z + 0.37;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_BesselJ0);

static void BM_BesselJ1(benchmark::State& state) {
  double z = 0.0, acc = 0.0;
  for (auto _ : state) {
    acc += specfun::bessel_j1(z);
    z = z > 200.0 ? 0.0 : z + 0.37;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_BesselJ1);

static void BM_LaplaceKernels(benchmark::State& state) {
  const Params p{1e-2, 0.0, 1e-1, 1e-2};
  double x = -30.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::laplace_kernels(50.0, x, p));
    x = x > 30.0 ? -30.0 : x + 0.11;
  }
}
BENCHMARK(BM_LaplaceKernels);
