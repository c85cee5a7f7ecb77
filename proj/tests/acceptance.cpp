// Acceptance run: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oqbm/closed_delta0.hpp"
#include "oqbm/closed_gammaz0.hpp"
#include "oqbm/closed_omega0.hpp"
#include "oqbm/oracle.hpp"
#include "oqbm/quadrature.hpp"
#include "oqbm/specfun.hpp"
#include "oqbm/spectral.hpp"
#include "oqbm_app/dispatch.hpp"
#include "oqbm_app/figures.hpp"
#include "specfun_reference.inc"

using namespace oqbm;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double linf(const std::vector<double>& a, const std::vector<double>& b) {
  double e = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) e = std::max(e, std::abs(a[j] - b[j]));
  return e;
}

double linf(const BlochField& a, const BlochField& b) {
  return std::max({linf(a.rho_plus, b.rho_plus), linf(a.c_i, b.c_i), linf(a.rho_minus, b.rho_minus), linf(a.c_r, b.c_r)});
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

const app::FigureScenario& scenario(const std::string& fig, const std::string& panel) {
  static std::map<std::string, std::vector<app::FigureScenario>> cache;
  auto it = cache.find(fig);
  if (it == cache.end()) it = cache.emplace(fig, app::figure_scenarios(fig)).first;
  for (const auto& s : it->second)
    if (s.panel == panel) return s;
  throw std::runtime_error("no panel " + panel);
}

// Fields on the figure solver grids, shared between criteria.
const BlochField& snapshot(const app::FigureScenario& sc, double t) {
  static std::map<std::string, BlochField> cache;
  const auto key = fmt("%s/%s/%.17g", sc.figure.c_str(), sc.panel.c_str(), t);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const auto r = app::select_regime(sc.params);
    it = cache.emplace(key, app::solve_snapshot(sc.params, r, sc.ic, t, sc.grid).field).first;
  }
  return it->second;
}

std::vector<std::size_t> local_maxima(const std::vector<double>& v, double floor) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j + 1 < v.size(); ++j)
    if (v[j] > floor && v[j] > v[j - 1] && v[j] >= v[j + 1]) out.push_back(j);
  return out;
}

Outcome tau_one() {
  const Params p{1e-3, 1e-3, 0.0, 1e-2};
  const GaussianMixture ic{0.75, 2.0, 1.0};
  const double tau = delta0::imbalance_zeros(p, 1).at(0);
  const double rel = std::abs(tau - 81.1423506200) / 81.1423506200;
  const SpatialGrid g(16.0, 4096);
  double qmax = 0.0;
  for (double t = 0.0; t <= 200.0; t += 1.0) qmax = std::max(qmax, max_abs(delta0::solve_delta0(p, ic, t, g).rho_minus));
  const double ratio = max_abs(delta0::solve_delta0(p, ic, tau, g).rho_minus) / qmax;
  return {rel < 1e-8 && ratio < 1e-10, fmt("tau_1 = %.10f, rel err %.1e, max|Q(tau_1)|/max|Q| = %.1e", tau, rel, ratio)};
}

Outcome three_way() {
  struct Case {
    const char* fig;
    double fd_half_width;
  };
  const Case cases[] = {{"fig1", 24.0}, {"fig2", 48.0}, {"fig3", 16.0}};
  const double times[] = {50.0, 200.0};
  double spec = 0.0, fd = 0.0, raw = 0.0, est = 0.0;
  for (const auto& c : cases) {
    const auto& sc = scenario(c.fig, "left");
    for (double t : times) spec = std::max(spec, linf(snapshot(sc, t), spectral::solve(sc.params, sc.ic, t, sc.grid)));
    const SpatialGrid g(c.fd_half_width, 4096);
    const auto runs = oracle::fd_richardson(sc.params, sc.ic, times, g);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const auto& r = runs[i];
      fd = std::max(fd, linf(r.extrapolated, omega0::solve_omega0(sc.params, sc.ic, times[i], r.extrapolated.grid)));
      raw = std::max(raw, linf(r.fine.field, omega0::solve_omega0(sc.params, sc.ic, times[i], g)));
      est = std::max(est, r.error_estimate);
    }
  }
  return {spec < 1e-7 && fd < 1e-5,
          fmt("closed vs spectral %.1e, closed vs FD (Richardson) %.1e, raw FD %.1e, FD estimate %.1e", spec, fd, raw,
              est)};
}

Outcome green_delta0() {
  double err = 0.0;
  const SpatialGrid g(4.0, 1024);
  for (double ratio : {0.5, 1.0, 2.0}) {
    const Params p{1e-3, ratio * 2e-2, 0.0, 1e-2};
    const auto G = spectral::green_function(p, 25.0, g);
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto m = delta0::green_delta0(p, 25.0, g.node(j));
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) err = std::max(err, std::abs(m(a, b) - G.entries[a][b][j]));
    }
  }
  return {err < 1e-8, fmt("max entry error %.1e over three damping regimes", err)};
}

Outcome gammaz0_kernels() {
  const Params p{1e-2, 0.0, 1e-1, 1e-2};
  double ident = 0.0, quad = 0.0;
  for (double t : {1.0, 25.0, 100.0}) {
    const SpatialGrid g(2.0 * p.delta * t + 12.0 * std::sqrt(4.0 * p.gamma_p * t) + 4.0, 2048);
    ident = std::max(ident, gammaz0::convolution_identities_check(p, t, g).max_printed());
    const auto G = gammaz0::green_gammaz0(p, t, g);
    std::vector<double> x;
    for (std::size_t j = 0; j < g.size(); j += 8) x.push_back(g.node(j));
    const double xi_max = std::sqrt(std::log(1e16) / (2.0 * p.gamma_p * t));
    const auto k = oracle::quad_inverse_fourier(
        [&](double xi) { return spectral::expm_pade(t * spectral::build_symbol(xi, p).q); }, x, xi_max);
    for (std::size_t m = 0; m < x.size(); ++m)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) quad = std::max(quad, std::abs(k.values[m](a, b) - G.entries[a][b][8 * m]));
  }
  return {ident < 1e-8 && quad < 1e-7, fmt("identities %.1e, green vs inverse Fourier quadrature %.1e", ident, quad)};
}

Outcome mass_positivity() {
  double mass = 0.0, low = 1e300;
  std::size_t n = 0;
  for (const auto& fig : app::figure_names()) {
    for (const auto& sc : app::figure_scenarios(fig)) {
      for (double t : sc.times) {
        const auto& f = snapshot(sc, t);
        mass = std::max(mass, std::abs(total_probability(f) - 1.0));
        for (double v : f.rho_plus) low = std::min(low, v);
        ++n;
      }
    }
  }
  return {mass < 1e-7 && low >= -1e-8, fmt("%zu snapshots, max |mass - 1| %.1e, min P %.1e", n, mass, low)};
}

Outcome stability() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> lg(-4.0, 1.0);
  std::size_t bad = 0;
  double worst = -1e300;
  for (int i = 0; i < 1000; ++i) {
    const Params p{std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng))};
    const double xs[2] = {0.0, std::pow(10.0, lg(rng) - 1.0)};
    const auto r = spectral::stability_check(p, xs);
    worst = std::max(worst, r.max_real_part);
    if (!(r.max_real_part < 0.0) || !(r.zero_eigenvalue <= 1e-12)) ++bad;
  }
  return {bad == 0, fmt("1000 draws, %zu counterexamples, largest Re lambda %.1e", bad, worst)};
}

Outcome shapes() {
  const auto& s1 = scenario("fig1", "left");
  const auto& f1 = snapshot(s1, 200.0);
  const double dx = s1.grid.spacing();
  const auto m1 = local_maxima(f1.rho_plus, 1e-8 * max_abs(f1.rho_plus));
  bool ok1 = m1.size() == 2;
  std::string where;
  for (auto j : m1) where += fmt(" %.3f", s1.grid.node(j));
  if (ok1) ok1 = std::abs(s1.grid.node(m1[0]) + 4.0) <= 2 * dx && std::abs(s1.grid.node(m1[1]) - 4.0) <= 2 * dx;

  const auto& s4 = scenario("fig4", "left");
  const auto& f4 = snapshot(s4, 100.0);
  const auto m4 = local_maxima(f4.rho_plus, 1e-8 * max_abs(f4.rho_plus));
  std::string where4;
  for (auto j : m4) where4 += fmt(" %.2f", s4.grid.node(j));
  return {ok1 && m4.size() == 3, fmt("fig1 t=200 maxima at%s; fig4 t=100 maxima at%s", where.c_str(), where4.c_str())};
}

double pair_kappa(double t, const Params& p, bool first) {
  const ThetaQuadrature q(256);
  const double a = 2.0 * p.delta * t;
  auto psi = [](double x) { return std::exp(-0.25 * x * x) * (1.0 + 0.3 * x); };
  double s = 0.0;
  for (std::size_t i = 0; i < q.order(); ++i) {
    const double th = q.nodes()[i], x = a * std::cos(th);
    const double k = first ? specfun::kg_kernel_1(t, x, p).value : specfun::kg_kernel_0(t, x, p);
    s += q.weights()[i] * k * psi(x) * a * std::sin(th);
  }
  if (first)
    for (const auto& d : specfun::kg_kernel_1(t, 0.0, p).delta_shifts) s += d.weight * psi(d.location);
  return s;
}

Outcome special_functions() {
  double e = 0.0, j0 = 0.0, j1 = 0.0;
  for (const auto& r : kErfcRef) e = std::max(e, std::abs(specfun::erfc(r[0]) - r[1]) / r[1]);
  for (const auto& r : kJ0Ref) j0 = std::max(j0, std::abs(specfun::bessel_j0(r[0]) - r[1]));
  for (const auto& r : kJ1Ref) j1 = std::max(j1, std::abs(specfun::bessel_j1(r[0]) - r[1]));
  const Params p{1e-2, 0.0, 1.0, 0.7};
  const double t = 5.0, exact = pair_kappa(t, p, true);
  auto diff = [&](double h) { return std::abs((pair_kappa(t + h, p, false) - pair_kappa(t - h, p, false)) / (2 * h) - exact); };
  const double e1 = diff(0.1), e2 = diff(0.05);
  const double order = std::log2(e1 / e2);
  return {e < 1e-12 && j0 < 1e-12 && j1 < 1e-12 && std::abs(order - 2.0) < 0.1,
          fmt("erfc %.1e (rel), J0 %.1e, J1 %.1e; kappa1 vs d/dt kappa0 error order %.2f", e, j0, j1, order)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"1 tau_1 reproduction", tau_one},
      {"2 three-way agreement, omega = 0", three_way},
      {"3 green matrix, delta = 0", green_delta0},
      {"4 gamma_z = 0 kernel identities", gammaz0_kernels},
      {"5 mass and positivity", mass_positivity},
      {"6 stability draws", stability},
      {"7 shape claims", shapes},
      {"8 special functions", special_functions},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& ex) {
      o = {false, std::string("threw: ") + ex.what()};
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%-36s %s  %s  [%.2f s]\n", name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), sec);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d/8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
