#include "oqbm/closed_delta0.hpp"

#include <cmath>
#include <numbers>

#include "oqbm/closed_omega0.hpp"
#include "oqbm/error.hpp"
#include "oqbm/parallel.hpp"
#include "oqbm/spectral.hpp"
#include "oqbm/specfun.hpp"

namespace oqbm::delta0 {

namespace {

void require_delta0(const Params& p) {
  if (p.delta != 0.0) fail(ErrorCode::WrongRegime, "closed forms for delta = 0 called with delta != 0");
}

void require_under(const Params& p) {
  require_delta0(p);
  if (classify(p).regime != Regime::Under) {
    fail(ErrorCode::WrongRegime, "imbalance formulas need the underdamped regime gamma_z < 2 omega");
  }
}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) fail(ErrorCode::NonPositiveTime, "t must be >= 0");
}

// e^{-gz t} C and e^{-gz t} S, with C = cosh(sqrt(nu) t), S = sinh(sqrt(nu) t)/sqrt(nu).
void damped_pair(double gz, double nu, double t, double& c, double& s) {
  const double z = nu * t * t;
  const double e = std::exp(-gz * t);
  if (std::abs(z) < 1e-2) {
    double tc = 1.0, ts = 1.0, sc = 1.0, ss = 1.0;
    for (int k = 1; k < 12; ++k) {
      tc *= z / ((2.0 * k - 1.0) * (2.0 * k));
      ts *= z / ((2.0 * k) * (2.0 * k + 1.0));
      sc += tc;
      ss += ts;
    }
    c = e * sc;
    s = e * t * ss;
    return;
  }
  if (nu > 0.0) {
    const double w = std::sqrt(nu);
    const double up = std::exp((w - gz) * t);
    const double down = std::exp(-(w + gz) * t);
    c = 0.5 * (up + down);
    s = 0.5 * (up - down) / w;
  } else {
    const double w = std::sqrt(-nu);
    c = e * std::cos(w * t);
    s = e * std::sin(w * t) / w;
  }
}

double trapezoid_heat(const std::vector<double>& f, const SpatialGrid& grid, double var, double x) {
  const double dx = grid.spacing();
  double acc = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double y = x - grid.node(j);
    acc += f[j] * std::exp(-0.5 * y * y / var);
  }
  return acc * dx / std::sqrt(2.0 * std::numbers::pi * var);
}

struct Convolved {
  double rho_plus, c_i, rho_minus, c_r;
};

Convolved heat_smooth(const InitialCondition& ic, double var, double x) {
  if (const auto prof = bloch_profiles(ic)) {
    return {omega0::heat_convolve(prof->rho_plus, var, 0.0, x), omega0::heat_convolve(prof->c_i, var, 0.0, x),
            omega0::heat_convolve(prof->rho_minus, var, 0.0, x), omega0::heat_convolve(prof->c_r, var, 0.0, x)};
  }
  const auto& d = std::get<CustomInitial>(ic).field;
  const auto b = to_bloch(d);
  return {trapezoid_heat(b.rho_plus, d.grid, var, x), trapezoid_heat(b.c_i, d.grid, var, x),
          trapezoid_heat(b.rho_minus, d.grid, var, x), trapezoid_heat(b.c_r, d.grid, var, x)};
}

double normal(double y, double var) { return std::exp(-0.5 * y * y / var) / std::sqrt(2.0 * std::numbers::pi * var); }

}  // namespace

DampingRegime classify(const Params& p, double tol_crit) {
  const double gz = p.gamma_z, w2 = 2.0 * p.omega;
  const double omega_pm = std::sqrt(std::abs(gz * gz - w2 * w2));
  if (std::abs(gz - w2) <= tol_crit * (gz + w2)) return {Regime::Critical, omega_pm};
  return {gz > w2 ? Regime::Over : Regime::Under, omega_pm};
}

Eigen::Matrix3d internal_matrix(const Params& p, double t) {
  require_delta0(p);
  require_time(t);
  const double gz = p.gamma_z, W = p.omega;
  double c, s;
  damped_pair(gz, gz * gz - 4.0 * W * W, t, c, s);
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = c - gz * s;
  m(1, 2) = W * s;
  m(2, 1) = -4.0 * W * s;
  m(2, 2) = c + gz * s;
  return m;
}

Eigen::Matrix3d green_delta0(const Params& p, double t, double x) {
  require_delta0(p);
  if (!(t > 0.0)) fail(ErrorCode::NonPositiveTime, "t must be > 0");
  return specfun::heat_kernel(t, x, p.gamma_p) * internal_matrix(p, t);
}

double imbalance_general(const Params& p, const InitialCondition& ic, double t, double x) {
  require_under(p);
  require_time(t);
  validate_initial(ic);
  const auto m = internal_matrix(p, t);
  const auto u = heat_smooth(ic, 4.0 * p.gamma_p * t, x);
  return m(2, 1) * u.c_i + m(2, 2) * u.rho_minus;
}

double imbalance_gaussian(const Params& p, const GaussianMixture& ic, double t, double x) {
  require_under(p);
  require_time(t);
  validate_initial(ic);
  const double w = classify(p).omega_pm;
  const double gz = p.gamma_z;
  const double a = std::exp(-gz * t) * (gz * std::sin(w * t) + w * std::cos(w * t)) / w;
  const double s = 4.0 * p.gamma_p * t;
  return a * (ic.p * normal(x, ic.sigma1 * ic.sigma1 + s) - (1.0 - ic.p) * normal(x, ic.sigma2 * ic.sigma2 + s));
}

double imbalance_coherent(const Params& p, const GaussianCoherent& ic, double t, double x) {
  require_under(p);
  require_time(t);
  validate_initial(ic);
  const double w = classify(p).omega_pm;
  const double gz = p.gamma_z, W = p.omega;
  const double e = std::exp(-gz * t);
  const double s2 = ic.sigma * ic.sigma;
  const double v = 4.0 * p.gamma_p * t;
  const double S2 = v + s2;
  const double coh = ic.mu * std::sqrt(ic.p * (1.0 - ic.p));
  const double first = -4.0 * W * coh * e * std::sin(w * t) / w * normal(x, S2) *
                       std::exp(-0.5 * ic.k * ic.k * v * s2 / S2) * std::sin(ic.k * x * s2 / S2);
  const double second = (2.0 * ic.p - 1.0) * e * (gz * std::sin(w * t) + w * std::cos(w * t)) / w * normal(x, S2);
  return first + second;
}

std::vector<double> imbalance_zeros(const Params& p, std::size_t n_max) {
  require_under(p);
  const double w = classify(p).omega_pm;
  const double phase = std::atan2(w, p.gamma_z);
  std::vector<double> tau;
  tau.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double t = (static_cast<double>(n) * std::numbers::pi - phase) / w;
    const double res = p.gamma_z * std::sin(w * t) + w * std::cos(w * t);
    if (!(std::abs(res) < 1e-12 * w * std::max(1.0, static_cast<double>(n) / 100.0))) {
      fail(ErrorCode::StabilityViolation, "imbalance zero failed verification");
    }
    tau.push_back(t);
  }
  return tau;
}

double density_delta0(const Params& p, const InitialCondition& ic, double t, double x) {
  require_delta0(p);
  require_time(t);
  validate_initial(ic);
  if (t == 0.0) {
    if (const auto prof = bloch_profiles(ic)) return evaluate(prof->rho_plus, x);
  }
  return heat_smooth(ic, 4.0 * p.gamma_p * t, x).rho_plus;
}

BlochField solve_delta0(const Params& p0, const InitialCondition& ic, double t, const SpatialGrid& grid) {
  const Params p = validate_params(p0);
  require_delta0(p);
  validate_initial(ic);
  require_time(t);
  if (t == 0.0) return to_bloch(sample_initial(ic, grid));
  const auto prof = bloch_profiles(ic);
  if (!prof) return spectral::solve(p, ic, t, grid);
  const auto m = internal_matrix(p, t);
  const double var = 4.0 * p.gamma_p * t;
  const double damp = std::exp(-2.0 * p.gamma_z * t);
  BlochField f = zero_bloch(grid, t);
  parallel_for(grid.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t j = b; j < e; ++j) {
      const auto u = heat_smooth(ic, var, grid.node(j));
      f.rho_plus[j] = u.rho_plus;
      f.c_i[j] = m(1, 1) * u.c_i + m(1, 2) * u.rho_minus;
      f.rho_minus[j] = m(2, 1) * u.c_i + m(2, 2) * u.rho_minus;
      f.c_r[j] = damp * u.c_r;
    }
  });
  return f;
}

}  // namespace oqbm::delta0
