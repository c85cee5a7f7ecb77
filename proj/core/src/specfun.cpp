#include "oqbm/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "oqbm/error.hpp"

namespace oqbm::specfun {

namespace {

constexpr double kInvSqrtPi = 0.5641895835477562869480794515607725858440506293290;

// exp(x*x) with the rounding error of x*x folded back in.
double exp_square(double x) {
  const double hi = x * x;
  const double lo = std::fma(x, x, -hi);
  return std::exp(hi) * (1.0 + lo);
}

double erfcx_asymptotic(double x) {
  // 1/(x sqrt(pi)) * sum (-1)^k (2k-1)!! / (2x^2)^k
  const double y = 1.0 / (2.0 * x * x);
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = -term * (2.0 * k - 1.0) * y;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return kInvSqrtPi * sum / x;
}

void require_positive_time(double t) {
  if (!(t > 0.0)) fail(ErrorCode::NonPositiveTime, "t must be > 0");
}

void require_laplace_params(const Params& p) {
  if (!(p.delta > 0.0) || !(p.omega > 0.0)) {
    fail(ErrorCode::DegenerateParams, "tail kernels need delta > 0 and omega > 0");
  }
}

double j0_series(double z) {
  const double y = -0.25 * z * z;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= y / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) && k > 2) break;
  }
  return sum;
}

// sum (-z^2/4)^k / (k! (k+1)!), so that J1(z) = (z/2) * this.
double j1_series_core(double z) {
  const double y = -0.25 * z * z;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= y / (static_cast<double>(k) * (k + 1));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) && k > 2) break;
  }
  return sum;
}

// Miller backward recurrence normalised by J0 + 2 sum J_2k = 1.
void bessel_miller(double z, double& j0, double& j1) {
  int m = 2 * static_cast<int>(std::ceil((z + 40.0) / 2.0));
  double jkp1 = 0.0, jk = 1e-30;
  double norm = 0.0;
  double r0 = 0.0, r1 = 0.0;
  for (int k = m; k >= 1; --k) {
    const double jkm1 = 2.0 * k / z * jk - jkp1;
    jkp1 = jk;
    jk = jkm1;
    // jk now holds J_{k-1}
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * jk;
    if (k - 1 == 1) r1 = jk;
    if (std::abs(jk) > 1e250) {
      jk *= 1e-250;
      jkp1 *= 1e-250;
      norm *= 1e-250;
      r1 *= 1e-250;
    }
  }
  r0 = jk;
  norm += r0;
  j0 = r0 / norm;
  j1 = r1 / norm;
}

// Hankel expansion of J_nu, nu in {0, 1}.
double bessel_hankel(int nu, double z) {
  const double mu = 4.0 * nu * nu;
  double t = 1.0;
  double P = 1.0, Q = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 400; ++k) {
    const double odd = 2.0 * k + 1.0;
    const double next = t * (mu - odd * odd) / (8.0 * (k + 1) * z);
    if (std::abs(next) >= prev) break;
    prev = std::abs(next);
    t = next;
    const int idx = k + 1;
    const double sgn = ((idx / 2) % 2 == 0) ? 1.0 : -1.0;
    if (idx % 2 == 0) P += sgn * t; else Q += sgn * t;
    if (std::abs(t) < 1e-18) break;
  }
  const double c = std::cos(z), s = std::sin(z);
  double cchi, schi;
  if (nu == 0) {
    cchi = (c + s) / std::numbers::sqrt2;
    schi = (s - c) / std::numbers::sqrt2;
  } else {
    cchi = (s - c) / std::numbers::sqrt2;
    schi = -(s + c) / std::numbers::sqrt2;
  }
  return std::sqrt(2.0 / (std::numbers::pi * z)) * (P * cchi - Q * schi);
}

constexpr double kSeriesMax = 8.0;
constexpr double kMillerMax = 25.0;

}  // namespace

double erf(double x) { return std::erf(x); }
double erfc(double x) { return std::erfc(x); }

double erfcx(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) {
    if (x < -26.7) return std::numeric_limits<double>::infinity();
    return 2.0 * exp_square(x) - erfcx(-x);
  }
  if (x < 26.0) return exp_square(x) * std::erfc(x);
  return erfcx_asymptotic(x);
}

double exp_erfc(double a, double b, double g) {
  if (b >= 0.0) return std::exp(g) * erfcx(b);
  return 2.0 * std::exp(a) - std::exp(g) * erfcx(-b);
}

double bessel_j0(double z) {
  if (std::isnan(z)) return z;
  if (z < 0.0) fail(ErrorCode::NegativeArgument, "bessel_j0 needs z >= 0");
  if (z < kSeriesMax) return j0_series(z);
  if (z < kMillerMax) {
    double j0, j1;
    bessel_miller(z, j0, j1);
    return j0;
  }
  return bessel_hankel(0, z);
}

double bessel_j1(double z) {
  if (std::isnan(z)) return z;
  if (z < 0.0) fail(ErrorCode::NegativeArgument, "bessel_j1 needs z >= 0");
  if (z < kSeriesMax) return 0.5 * z * j1_series_core(z);
  if (z < kMillerMax) {
    double j0, j1;
    bessel_miller(z, j0, j1);
    return j1;
  }
  return bessel_hankel(1, z);
}

double bessel_j1_over_z(double z) {
  if (z < 0.0) fail(ErrorCode::NegativeArgument, "bessel_j1_over_z needs z >= 0");
  if (z < kSeriesMax) return 0.5 * j1_series_core(z);
  return bessel_j1(z) / z;
}

double heat_kernel(double t, double x, double gamma_p) {
  require_positive_time(t);
  const double v = 8.0 * gamma_p * t;
  return std::exp(-x * x / v) / (2.0 * std::sqrt(2.0 * std::numbers::pi * gamma_p * t));
}

double laplace_fl(double x, const Params& p) {
  require_laplace_params(p);
  return p.omega / (2.0 * p.delta) * std::exp(-p.omega / p.delta * std::abs(x));
}

LaplaceKernels laplace_kernels(double t, double x, const Params& p) {
  require_positive_time(t);
  require_laplace_params(p);
  const double D = p.delta, W = p.omega, gp = p.gamma_p;
  const double A = W / D;
  const double s = std::sqrt(2.0 * gp * t);
  const double c = 2.0 * W * W * gp * t / (D * D);
  const double b1 = (4.0 * gp * W * t - D * x) / (2.0 * D * s);
  const double b2 = (4.0 * gp * W * t + D * x) / (2.0 * D * s);
  const double G = -x * x / (8.0 * gp * t);
  const double E1 = exp_erfc(c - A * x, b1, G);
  const double E2 = exp_erfc(c + A * x, b2, G);

  LaplaceKernels k;
  k.h_plus = W / (4.0 * D) * (E1 + E2);
  k.h_minus = W / (4.0 * D) * (E1 - E2);
  const double base = 4.0 * W * W * gp * t - D * D;
  const double D3 = D * D * D;
  k.phi_plus = -W / (8.0 * D3) * ((base - W * D * x) * E1 + (base + W * D * x) * E2) +
               (W * W) / (D * D) * std::sqrt(gp * t / (2.0 * std::numbers::pi)) * std::exp(G);
  k.phi_minus = W * W / (8.0 * D3) * ((4.0 * W * gp * t + D * x) * E2 - (4.0 * W * gp * t - D * x) * E1);
  return k;
}

double h_plus(double t, double x, const Params& p) { return laplace_kernels(t, x, p).h_plus; }
double h_minus(double t, double x, const Params& p) { return laplace_kernels(t, x, p).h_minus; }
double phi_plus(double t, double x, const Params& p) { return laplace_kernels(t, x, p).phi_plus; }
double phi_minus(double t, double x, const Params& p) { return laplace_kernels(t, x, p).phi_minus; }

double kg_kernel_0(double t, double x, const Params& p) {
  require_positive_time(t);
  if (!(p.delta > 0.0)) fail(ErrorCode::DegenerateParams, "kg kernels need delta > 0");
  const double a = 2.0 * p.delta * t;
  if (std::abs(x) >= a) return 0.0;
  const double r = std::sqrt((a - x) * (a + x));
  return bessel_j0(p.omega / p.delta * r) / (4.0 * p.delta);
}

KernelSample kg_kernel_1(double t, double x, const Params& p) {
  require_positive_time(t);
  if (!(p.delta > 0.0)) fail(ErrorCode::DegenerateParams, "kg kernels need delta > 0");
  const double a = 2.0 * p.delta * t;
  KernelSample k;
  k.delta_shifts = {{a, 0.5}, {-a, 0.5}};
  if (std::abs(x) > a) return k;
  const double r = std::sqrt(std::max(0.0, (a - x) * (a + x)));
  const double A = p.omega / p.delta;
  // -t W J1(A r) / r = -t W A (J1(z)/z)
  k.value = -t * p.omega * A * bessel_j1_over_z(A * r);
  return k;
}

}  // namespace oqbm::specfun
