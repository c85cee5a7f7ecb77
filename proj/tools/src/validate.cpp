#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "oqbm/closed_delta0.hpp"
#include "oqbm/closed_gammaz0.hpp"
#include "oqbm/closed_omega0.hpp"
#include "oqbm/oracle.hpp"
#include "oqbm/spectral.hpp"
#include "oqbm_app/runner.hpp"

namespace oqbm::app {

namespace {

double linf(const std::vector<double>& a, const std::vector<double>& b) {
  double e = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) e = std::max(e, std::abs(a[j] - b[j]));
  return e;
}

double field_linf(const BlochField& a, const BlochField& b) {
  return std::max({linf(a.rho_plus, b.rho_plus), linf(a.c_i, b.c_i), linf(a.rho_minus, b.rho_minus), linf(a.c_r, b.c_r)});
}

CheckResult bounded(std::string name, double err, double tol, std::string note = {}) {
  return {std::move(name), err < tol, err, tol, std::move(note)};
}

const Params kOmega0{1e-3, 1e-3, 1e-2, 0.0};
const Params kDelta0{1e-3, 1e-3, 0.0, 1e-2};
const Params kGammaz0{1e-2, 0.0, 1e-1, 1e-2};

CheckResult tau1() {
  const double tau = delta0::imbalance_zeros(kDelta0, 1).at(0);
  return bounded("tau_1 = 81.1423506200", std::abs(tau - 81.1423506200) / 81.1423506200, 1e-8);
}

CheckResult omega0_vs_spectral(double t) {
  const SpatialGrid grid(24.0, 4096);
  const GaussianMixture ic{0.75, 1.0, 2.0};
  return bounded("omega0 gaussian vs spectral, t=" + std::to_string(int(t)),
                 field_linf(omega0::solve_omega0(kOmega0, ic, t, grid), spectral::solve(kOmega0, ic, t, grid)), 1e-7);
}

CheckResult delta0_green() {
  double err = 0.0;
  const SpatialGrid grid(4.0, 1024);
  for (double ratio : {0.5, 1.0, 2.0}) {
    const Params p{1e-3, ratio * 2e-2, 0.0, 1e-2};
    const auto g = spectral::green_function(p, 25.0, grid);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const auto m = delta0::green_delta0(p, 25.0, grid.node(j));
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) err = std::max(err, std::abs(m(a, b) - g.entries[a][b][j]));
    }
  }
  return bounded("delta0 green vs FFT, 3 regimes", err, 1e-8);
}

SpatialGrid gammaz0_grid(double t) {
  return SpatialGrid(2.0 * kGammaz0.delta * t + 12.0 * std::sqrt(4.0 * kGammaz0.gamma_p * t) + 4.0, 2048);
}

CheckResult identities(double t) {
  const auto r = gammaz0::convolution_identities_check(kGammaz0, t, gammaz0_grid(t));
  return bounded("gammaz0 convolution identities, t=" + std::to_string(int(t)), r.max_printed(), 1e-8);
}

CheckResult greez_vs_fft(double t) {
  const auto grid = gammaz0_grid(t);
  const auto a = gammaz0::green_gammaz0(kGammaz0, t, grid);
  const auto b = spectral::green_function(kGammaz0, t, grid);
  double err = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) err = std::max(err, linf(a.entries[i][j], b.entries[i][j]));
  return bounded("gammaz0 green vs FFT, t=" + std::to_string(int(t)), err, 1e-7);
}

CheckResult greez_vs_quadrature(double t) {
  const auto grid = gammaz0_grid(t);
  const auto a = gammaz0::green_gammaz0(kGammaz0, t, grid);
  std::vector<double> x;
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < grid.size(); j += 8) {
    x.push_back(grid.node(j));
    idx.push_back(j);
  }
  const double xi_max = std::sqrt(std::log(1e16) / (2.0 * kGammaz0.gamma_p * t));
  const auto k = oracle::quad_inverse_fourier(
      [&](double xi) { return spectral::expm_pade(t * spectral::build_symbol(xi, kGammaz0).q); }, x, xi_max);
  double err = 0.0;
  for (std::size_t m = 0; m < x.size(); ++m)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) err = std::max(err, std::abs(k.values[m](i, j) - a.entries[i][j][idx[m]]));
  return bounded("gammaz0 green vs quadrature, t=" + std::to_string(int(t)), err, 1e-7);
}

CheckResult mass_fig1() {
  const SpatialGrid grid(24.0, 4096);
  const auto f = omega0::solve_omega0(kOmega0, GaussianMixture{0.75, 1.0, 2.0}, 200.0, grid);
  double mn = 0.0;
  for (double v : f.rho_plus) mn = std::min(mn, v);
  const double err = std::abs(total_probability(f) - 1.0);
  return {"mass and positivity, fig1 t=200", err < 1e-7 && mn >= -1e-8, err, 1e-7, ""};
}

CheckResult stability(std::size_t draws) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> lg(-4.0, 1.0);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    const Params p{std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng))};
    const double xi = std::pow(10.0, lg(rng) - 1.0);
    const double xs[2] = {0.0, xi};
    const auto r = spectral::stability_check(p, xs);
    if (!(r.max_real_part < 0.0) || !(r.zero_eigenvalue <= 1e-12)) ++bad;
  }
  return {"stability, " + std::to_string(draws) + " random draws", bad == 0, double(bad), 1.0, "counterexamples"};
}

CheckResult fd_vs_closed(double t) {
  const SpatialGrid grid(24.0, 4096);
  const GaussianMixture ic{0.75, 1.0, 2.0};
  const double times[1] = {t};
  const auto r = oracle::fd_richardson(kOmega0, ic, times, grid).front();
  const double raw = field_linf(r.fine.field, omega0::solve_omega0(kOmega0, ic, t, grid));
  char note[64];
  std::snprintf(note, sizeof note, "raw %.2e, estimate %.2e", raw, r.error_estimate);
  return bounded("FD (Richardson) vs omega0 gaussian, t=" + std::to_string(int(t)),
                 field_linf(r.extrapolated, omega0::solve_omega0(kOmega0, ic, t, r.extrapolated.grid)), 1e-5, note);
}

CheckResult fd_vs_delta0(double t) {
  const SpatialGrid grid(16.0, 4096);
  const GaussianCoherent ic{0.75, 0.8, 1.0, 1.0};
  const auto fd = oracle::fd_integrate(kDelta0, ic, t, grid);
  return bounded("FD vs delta0 coherent, t=" + std::to_string(int(t)),
                 field_linf(fd.field, delta0::solve_delta0(kDelta0, ic, t, grid)), 1e-5);
}

CheckResult fd_vs_gammaz0(double t) {
  const SpatialGrid grid(224.0, 1u << 14);
  const auto ic = LaplaceCoherent::for_params(0.25, 0.0, -0.5, kGammaz0);
  const auto fd = oracle::fd_integrate(kGammaz0, ic, t, grid);
  return bounded("FD vs gammaz0 laplace, t=" + std::to_string(int(t)),
                 field_linf(fd.field, gammaz0::solve_laplace_coherent(kGammaz0, ic, t, grid)), 1e-5);
}

}  // namespace

std::vector<CheckResult> validation_suite(Level level) {
  std::vector<std::function<CheckResult()>> checks{
      tau1,
      [] { return omega0_vs_spectral(50.0); },
      delta0_green,
      [] { return identities(25.0); },
      [] { return greez_vs_fft(25.0); },
      mass_fig1,
      [] { return stability(200); },
  };
  if (level == Level::Full) {
    checks.insert(checks.end(), {
                                    [] { return omega0_vs_spectral(200.0); },
                                    [] { return identities(100.0); },
                                    [] { return greez_vs_quadrature(25.0); },
                                    [] { return stability(1000); },
                                    [] { return fd_vs_closed(50.0); },
                                    [] { return fd_vs_closed(200.0); },
                                    [] { return fd_vs_delta0(100.0); },
                                    [] { return fd_vs_gammaz0(25.0); },
                                });
  }
  std::vector<CheckResult> out;
  for (const auto& c : checks) {
    try {
      out.push_back(c());
    } catch (const std::exception& e) {
      out.push_back({"(check threw)", false, 0.0, 0.0, e.what()});
    }
  }
  return out;
}

bool run_validate(Level level, std::ostream& os) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = validation_suite(level);
  bool ok = true;
  char line[256];
  std::snprintf(line, sizeof line, "%-44s %-6s %12s %10s\n", "check", "result", "error", "tol");
  os << line;
  for (const auto& r : results) {
    ok = ok && r.passed;
    std::snprintf(line, sizeof line, "%-44s %-6s %12.3e %10.1e %s\n", r.name.c_str(), r.passed ? "PASS" : "FAIL", r.error,
                  r.tolerance, r.note.c_str());
    os << line;
  }
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::snprintf(line, sizeof line, "%zu checks, %s, %.1f s\n", results.size(), ok ? "all passed" : "FAILURES", sec);
  os << line;
  return ok;
}

}  // namespace oqbm::app
