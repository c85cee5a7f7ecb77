#include "oqbm/closed_omega0.hpp"

#include <cmath>
#include <numbers>

#include "oqbm/error.hpp"
#include "oqbm/fourier.hpp"
#include "oqbm/parallel.hpp"
#include "oqbm/spectral.hpp"
#include "oqbm/specfun.hpp"

namespace oqbm::omega0 {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343818684758586311649;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double normal(double y, double var) { return kInvSqrt2Pi / std::sqrt(var) * std::exp(-0.5 * y * y / var); }

void require_omega0(const Params& p) {
  if (p.omega != 0.0) fail(ErrorCode::WrongRegime, "closed forms for omega = 0 called with omega != 0");
}

// (1/4a) [e^{s^2/2a^2 - y/a} erfc((s^2/a - y)/(sqrt2 s)) + (y -> -y)]
double laplace_heat(double a, double s2, double y) {
  const double s = std::sqrt(s2);
  const double g = -0.5 * y * y / s2;
  const double c = 0.5 * s2 / (a * a);
  const double b1 = (s2 / a - y) / (std::numbers::sqrt2 * s);
  const double b2 = (s2 / a + y) / (std::numbers::sqrt2 * s);
  return (specfun::exp_erfc(c - y / a, b1, g) + specfun::exp_erfc(c + y / a, b2, g)) / (4.0 * a);
}

// (1/4a) [erf((y+a)/(sqrt2 s)) - erf((y-a)/(sqrt2 s))]
double box_heat(double a, double s2, double y) {
  const double r = 1.0 / std::sqrt(2.0 * s2);
  double v;
  if (y - a > 0.0) {
    v = std::erfc((y - a) * r) - std::erfc((y + a) * r);
  } else if (y + a < 0.0) {
    v = std::erfc(-(y + a) * r) - std::erfc(-(y - a) * r);
  } else {
    v = std::erf((y + a) * r) - std::erf((y - a) * r);
  }
  return v / (4.0 * a);
}

}  // namespace

Eigen::Matrix3d green_omega0(const Params& p, double t, double x) {
  require_omega0(p);
  if (!(t > 0.0)) fail(ErrorCode::NonPositiveTime, "t must be > 0");
  const double var = 4.0 * p.gamma_p * t;
  const double a = 2.0 * p.delta * t;
  const double right = normal(x - a, var);
  const double left = normal(x + a, var);
  Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
  g(0, 0) = g(2, 2) = 0.5 * (right + left);
  g(0, 2) = g(2, 0) = 0.5 * (right - left);
  g(1, 1) = std::exp(-2.0 * p.gamma_z * t) * normal(x, var);
  return g;
}

double heat_convolve(const Shape& shape, double variance, double shift, double x) {
  const double y = x - shift;
  if (variance <= 0.0) return evaluate(shape, y);
  return std::visit(
      overloaded{
          [&](const GaussianShape& g) { return normal(y, g.sigma * g.sigma + variance); },
          [&](const LaplaceShape& l) { return laplace_heat(l.scale, variance, y); },
          [&](const BoxShape& b) { return box_heat(b.half_width, variance, y); },
          [&](const GaussianWaveShape& w) {
            const double s2 = w.sigma * w.sigma;
            const double S2 = s2 + variance;
            const double damp = std::exp(-0.5 * w.k * w.k * variance * s2 / S2);
            const double arg = w.k * y * s2 / S2;
            return normal(y, S2) * damp * (w.sine ? std::sin(arg) : std::cos(arg));
          },
      },
      shape);
}

double heat_convolve(const Profile& f, double variance, double shift, double x) {
  double v = 0.0;
  for (const auto& t : f) v += t.weight * heat_convolve(t.shape, variance, shift, x);
  return v;
}

std::vector<double> solve_cr(const InitialCondition& ic, double t, const SpatialGrid& grid, const Params& p) {
  const auto n = grid.size();
  std::vector<double> out(n, 0.0);
  if (t < 0.0) fail(ErrorCode::NonPositiveTime, "t must be >= 0");
  const double damp = std::exp(-2.0 * p.gamma_z * t);
  const double var = 4.0 * p.gamma_p * t;
  if (const auto prof = bloch_profiles(ic)) {
    if (prof->c_r.empty()) return out;
    for (std::size_t j = 0; j < n; ++j) out[j] = damp * heat_convolve(prof->c_r, var, 0.0, grid.node(j));
    return out;
  }
  const auto d = sample_initial(ic, grid);
  std::vector<double> cr(n);
  for (std::size_t j = 0; j < n; ++j) cr[j] = d.rho12[j].real();
  if (t == 0.0) return cr;
  auto spec = fft::analyze(grid, cr);
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = grid.frequency(k);
    spec[k] *= damp * std::exp(-2.0 * p.gamma_p * t * xi * xi);
    if (k == grid.nyquist_index()) spec[k] = spec[k].real();
  }
  return fft::real_part(fft::synthesize(grid, spec));
}

namespace {

DensityImbalance drifted(const Params& p, const InitialCondition& ic, double t, double x) {
  require_omega0(p);
  if (t < 0.0) fail(ErrorCode::NonPositiveTime, "t must be >= 0");
  validate_initial(ic);
  const auto d = *density_profiles(ic);
  const double var = 4.0 * p.gamma_p * t;
  const double a = 2.0 * p.delta * t;
  const double r11 = heat_convolve(d.rho11, var, a, x);
  const double r22 = heat_convolve(d.rho22, var, -a, x);
  return {r11 + r22, r11 - r22};
}

}  // namespace

DensityImbalance gaussian_solution(const Params& p, const GaussianMixture& ic, double t, double x) {
  return drifted(p, ic, t, x);
}

DensityImbalance laplace_solution(const Params& p, const LaplaceMixture& ic, double t, double x) {
  return drifted(p, ic, t, x);
}

DensityImbalance uniform_solution(const Params& p, const UniformMixture& ic, double t, double x) {
  return drifted(p, ic, t, x);
}

BlochField solve_omega0(const Params& p0, const InitialCondition& ic, double t, const SpatialGrid& grid) {
  const Params p = validate_params(p0);
  require_omega0(p);
  validate_initial(ic);
  if (t < 0.0) fail(ErrorCode::NonPositiveTime, "t must be >= 0");
  const auto d = density_profiles(ic);
  if (!d || t == 0.0) {
    if (t == 0.0) return to_bloch(sample_initial(ic, grid));
    return spectral::solve(p, ic, t, grid);
  }
  const double var = 4.0 * p.gamma_p * t;
  const double a = 2.0 * p.delta * t;
  const double damp = std::exp(-2.0 * p.gamma_z * t);
  BlochField f = zero_bloch(grid, t);
  parallel_for(grid.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t j = b; j < e; ++j) {
      const double x = grid.node(j);
      const double r11 = heat_convolve(d->rho11, var, a, x);
      const double r22 = heat_convolve(d->rho22, var, -a, x);
      f.rho_plus[j] = r11 + r22;
      f.rho_minus[j] = r11 - r22;
      f.c_i[j] = damp * heat_convolve(d->im12, var, 0.0, x);
      f.c_r[j] = damp * heat_convolve(d->re12, var, 0.0, x);
    }
  });
  return f;
}

}  // namespace oqbm::omega0
