#pragma once

#include <cstddef>

#include "oqbm/fields.hpp"
#include "oqbm/initial.hpp"
#include "oqbm/params.hpp"
#include "oqbm/spectral.hpp"

namespace oqbm::gammaz0 {

struct QuadratureOptions {
  std::size_t start_order = 64;
  std::size_t max_order = 4096;
  double tol = 1e-9;  // absolute difference between successive orders
};

// Green's matrix assembled from g, h+-, kappa0, kappa1. The kappa1 deltas act on smooth
// kernels, so they enter as exact half-weight translates and the entries are fully sampled.
spectral::GreenMatrix green_gammaz0(const Params& p, double t, const SpatialGrid& grid,
                                    const QuadratureOptions& opt = {});

struct IdentityReport {
  double g_fl = 0.0;        // g * f_L vs h+
  double g_sgn_fl = 0.0;    // g * (sgn f_L) vs h-
  double xg_fl = 0.0;       // (x g) * f_L vs (4 gamma_p t omega / delta) h-
  double fl_fl = 0.0;       // f_L * f_L vs (omega |x| + delta) f_L / (2 delta)
  double fl_kappa1 = 0.0;   // f_L * kappa1 vs f_L, x > 2 delta t
  double fl_kappa0 = 0.0;   // f_L * kappa0 vs t f_L, x > 2 delta t
  std::size_t points = 0;
  double max_printed() const;
};

// Both sides evaluated independently; left sides by composite Gauss-Legendre in x.
IdentityReport convolution_identities_check(const Params& p, double t, const SpatialGrid& grid);

BlochField solve_laplace_coherent(const Params& p, const LaplaceCoherent& ic, double t, const SpatialGrid& grid,
                                  const QuadratureOptions& opt = {});

double density_pdfF(const Params& p, const LaplaceCoherent& ic, double t, double x,
                    const QuadratureOptions& opt = {});
double imbalance_popimbz(const Params& p, const LaplaceCoherent& ic, double t, double x,
                         const QuadratureOptions& opt = {});

struct FarField {
  double u1, u2, u3;
};

// Explicit h+- expressions for x > 2 delta t. They drop the Gaussian smoothing of the
// light-cone edge and are accurate to O((t omega)^2) only.
FarField far_field(const Params& p, const LaplaceCoherent& ic, double t, double x);

}  // namespace oqbm::gammaz0
