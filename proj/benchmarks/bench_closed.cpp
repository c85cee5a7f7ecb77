#include <benchmark/benchmark.h>

#include "oqbm/closed_delta0.hpp"
#include "oqbm/closed_gammaz0.hpp"
#include "oqbm/closed_omega0.hpp"
#include "oqbm/oracle.hpp"

using namespace oqbm;

static void BM_Omega0Gaussian(benchmark::State& state) {
  const Params p{1e-3, 1e-3, 1e-2, 0.0};
  const SpatialGrid g(24.0, 4096);
  for (auto _ : state) benchmark::DoNotOptimize(omega0::solve_omega0(p, GaussianMixture{0.75, 1.0, 2.0}, 200.0, g));
}
BENCHMARK(BM_Omega0Gaussian)->Unit(benchmark::kMillisecond);

static void BM_Delta0Coherent(benchmark::State& state) {
  const Params p{1e-3, 1e-3, 0.0, 1e-2};
  const SpatialGrid g(16.0, 4096);
  for (auto _ : state)
    benchmark::DoNotOptimize(delta0::solve_delta0(p, GaussianCoherent{0.75, 0.8, 1.0, 1.0}, 100.0, g));
}
BENCHMARK(BM_Delta0Coherent)->Unit(benchmark::kMillisecond);

static void BM_Gammaz0Laplace(benchmark::State& state) {
  const Params p{1e-2, 0.0, 1e-1, 1e-2};
  const auto ic = LaplaceCoherent::for_params(0.25, 0.0, -0.5, p);
  const SpatialGrid g(224.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gammaz0::solve_laplace_coherent(p, ic, 100.0, g));
}
BENCHMARK(BM_Gammaz0Laplace)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

static void BM_Gammaz0Green(benchmark::State& state) {
  const Params p{1e-2, 0.0, 1e-1, 1e-2};
  const SpatialGrid g(48.0, 2048);
  for (auto _ : state) benchmark::DoNotOptimize(gammaz0::green_gammaz0(p, 100.0, g));
}
BENCHMARK(BM_Gammaz0Green)->Unit(benchmark::kMillisecond);

static void BM_FdOracle(benchmark::State& state) {
  const Params p{1e-3, 1e-3, 1e-2, 0.0};
  const SpatialGrid g(24.0, 1024);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::fd_integrate(p, GaussianMixture{0.75, 1.0, 2.0}, 20.0, g));
}
BENCHMARK(BM_FdOracle)->Unit(benchmark::kMillisecond);
