#pragma once

#include <Eigen/Dense>
#include <vector>

#include "oqbm/fields.hpp"
#include "oqbm/initial.hpp"
#include "oqbm/params.hpp"

namespace oqbm::omega0 {

// (1,1)=(3,3), (1,3)=(3,1) as half sums/differences of Gaussians drifted by +-2 delta t.
Eigen::Matrix3d green_omega0(const Params& p, double t, double x);

// Exact (N(0, variance) * f)(x - shift) for the elementary shapes.
double heat_convolve(const Shape& s, double variance, double shift, double x);
double heat_convolve(const Profile& f, double variance, double shift, double x);

// C_R(t) = exp(-2 gamma_z t) (heat kernel * C_R(0)); valid in every regime.
std::vector<double> solve_cr(const InitialCondition& ic, double t, const SpatialGrid& grid, const Params& p);

struct DensityImbalance {
  double density;    // P = rho11 + rho22
  double imbalance;  // Q = rho11 - rho22
};

DensityImbalance gaussian_solution(const Params& p, const GaussianMixture& ic, double t, double x);
DensityImbalance laplace_solution(const Params& p, const LaplaceMixture& ic, double t, double x);
DensityImbalance uniform_solution(const Params& p, const UniformMixture& ic, double t, double x);

// Full field for any analytic initial condition (custom data goes through the spectral route).
BlochField solve_omega0(const Params& p, const InitialCondition& ic, double t, const SpatialGrid& grid);

}  // namespace oqbm::omega0
