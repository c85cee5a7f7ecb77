#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "oqbm/fields.hpp"
#include "oqbm/initial.hpp"
#include "oqbm/params.hpp"

namespace oqbm::delta0 {

enum class Regime { Over, Under, Critical };

struct DampingRegime {
  Regime regime;
  double omega_pm;  // sqrt(|gamma_z^2 - 4 omega^2|)
};

DampingRegime classify(const Params& p, double tol_crit = 1e-9);

// M(t) with G(t,x) = g(t,x) M(t). Entire in gamma_z^2 - 4 omega^2, so the same
// expression covers all three regimes without dividing by omega_pm near the boundary.
Eigen::Matrix3d internal_matrix(const Params& p, double t);

Eigen::Matrix3d green_delta0(const Params& p, double t, double x);

// Q = M(2,1) (g * Im psi12) + M(2,2) (g * (psi11 - psi22)), underdamped only.
double imbalance_general(const Params& p, const InitialCondition& ic, double t, double x);

// Closed forms for the Gaussian mixture and the Gaussian coherent state.
double imbalance_gaussian(const Params& p, const GaussianMixture& ic, double t, double x);
double imbalance_coherent(const Params& p, const GaussianCoherent& ic, double t, double x);

// Zeros of gamma_z sin(w t) + w cos(w t), n = 1..n_max.
std::vector<double> imbalance_zeros(const Params& p, std::size_t n_max);

double density_delta0(const Params& p, const InitialCondition& ic, double t, double x);

BlochField solve_delta0(const Params& p, const InitialCondition& ic, double t, const SpatialGrid& grid);

}  // namespace oqbm::delta0
