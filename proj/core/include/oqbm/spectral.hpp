#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <span>
#include <vector>

#include "oqbm/fields.hpp"
#include "oqbm/initial.hpp"
#include "oqbm/params.hpp"
#include "oqbm/specfun.hpp"

namespace oqbm::spectral {

using cplx = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;

struct SymbolMatrix {
  double xi = 0.0;
  Matrix3c q = Matrix3c::Zero();
};

SymbolMatrix build_symbol(double xi, const Params& p);

struct CharCoeffs {
  double a1, a2, a3;
};
CharCoeffs char_coeffs(double xi, const Params& p);

// Closed-form roots (principal branches), then one Newton polish on the shifted cubic.
std::array<cplx, 3> cardano_eigenvalues(double xi, const Params& p, bool* well_conditioned = nullptr);
std::array<cplx, 3> numeric_eigenvalues(const Matrix3c& q);

struct EigenSystem {
  std::array<cplx, 3> lambdas;
  Matrix3c vectors;
  Matrix3c inverse;
  double condition = 0.0;
  bool numeric_fallback = false;
};

// Throws DefectiveMatrix when no well-conditioned eigenbasis exists.
EigenSystem eigensystem(const SymbolMatrix& sm, const Params& p);

struct StabilityReport {
  double max_real_part = 0.0;      // over samples with xi != 0
  double zero_eigenvalue = 0.0;    // smallest |lambda| at xi = 0 (0 if not sampled)
  std::size_t samples = 0;
};
StabilityReport stability_check(const Params& p, std::span<const double> xi_samples);

// exp(A) by scaling and squaring with a [6/6] Pade approximant.
Matrix3c expm_pade(const Matrix3c& a);

// exp(t Q(xi)); uses es when given and well conditioned, otherwise Pade.
Matrix3c exp_symbol(const SymbolMatrix& sm, double t, const EigenSystem* es = nullptr);
// Tries the eigen route first and falls back to Pade.
Matrix3c exp_symbol(const SymbolMatrix& sm, double t, const Params& p);

struct GreenMatrix {
  SpatialGrid grid;
  double time = 0.0;
  std::array<std::array<std::vector<double>, 3>, 3> entries;
  std::array<std::array<std::vector<specfun::DeltaShift>, 3>, 3> delta_shifts;
  double max_imag_residue = 0.0;
};

// Throws GridUnderResolved if dx > sqrt(4 gamma_p t)/8.
void check_resolution(const Params& p, double t, const SpatialGrid& grid);

GreenMatrix green_function(const Params& p, double t, const SpatialGrid& grid, double eps_tail = 1e-8);

BlochField solve(const Params& p, const InitialCondition& ic, double t, const SpatialGrid& grid);

}  // namespace oqbm::spectral
