#pragma once

#include <vector>

#include "oqbm/params.hpp"

namespace oqbm::specfun {

double erf(double x);
double erfc(double x);
// exp(x^2) erfc(x), finite for all x where the result is representable.
double erfcx(double x);
// exp(a) erfc(b) given g = a - b^2, evaluated without forming exp(a) alone when b >= 0.
double exp_erfc(double a, double b, double g);

double bessel_j0(double z);
double bessel_j1(double z);
// J1(z)/z with the limit 1/2 at z = 0.
double bessel_j1_over_z(double z);

// g(t,x) = exp(-x^2/(8 gamma_p t)) / (2 sqrt(2 pi gamma_p t)).
double heat_kernel(double t, double x, double gamma_p);

// f_L(x) = (omega / 2 delta) exp(-omega |x| / delta).
double laplace_fl(double x, const Params& p);

struct LaplaceKernels {
  double h_plus = 0.0;
  double h_minus = 0.0;
  double phi_plus = 0.0;
  double phi_minus = 0.0;
};

// All four tail kernels from one pair of scaled erfc evaluations.
LaplaceKernels laplace_kernels(double t, double x, const Params& p);

double h_plus(double t, double x, const Params& p);
double h_minus(double t, double x, const Params& p);
double phi_plus(double t, double x, const Params& p);
double phi_minus(double t, double x, const Params& p);

struct DeltaShift {
  double location;
  double weight;
};

struct KernelSample {
  double value = 0.0;
  std::vector<DeltaShift> delta_shifts;
};

double kg_kernel_0(double t, double x, const Params& p);
KernelSample kg_kernel_1(double t, double x, const Params& p);

}  // namespace oqbm::specfun
