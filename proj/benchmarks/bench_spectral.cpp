#include <benchmark/benchmark.h>

#include "oqbm/spectral.hpp"

using namespace oqbm;

namespace {
const Params kGeneral{1e-3, 1e-3, 1e-2, 1e-2};
}

static void BM_Cardano(benchmark::State& state) {
  double xi = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral::cardano_eigenvalues(xi, kGeneral));
    xi = xi > 10.0 ? 0.01 : xi * 1.01;
  }
}
BENCHMARK(BM_Cardano);

static void BM_ExpSymbolEigen(benchmark::State& state) {
  const auto sm = spectral::build_symbol(0.7, kGeneral);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::exp_symbol(sm, 50.0, kGeneral));
}
BENCHMARK(BM_ExpSymbolEigen);

static void BM_ExpmPade(benchmark::State& state) {
  const auto q = spectral::build_symbol(0.7, kGeneral).q * 50.0;
  for (auto _ : state) benchmark::DoNotOptimize(spectral::expm_pade(q));
}
BENCHMARK(BM_ExpmPade);

static void BM_SpectralSolve(benchmark::State& state) {
  const SpatialGrid g(24.0, static_cast<std::size_t>(state.range(0)));
  const GaussianMixture ic{0.75, 1.0, 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(spectral::solve(kGeneral, ic, 50.0, g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectralSolve)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);
