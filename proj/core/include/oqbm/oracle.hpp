#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "oqbm/fields.hpp"
#include "oqbm/initial.hpp"
#include "oqbm/params.hpp"

// Reference engines that only depend on the core types.
namespace oqbm::oracle {

struct FdOptions {
  double dt = 0.0;              // 0 selects the automatic step
  bool estimate_error = false;  // re-run with dt/2
  double eps_tail = 1e-8;
};

struct FdResult {
  BlochField field;
  double error_estimate = 0.0;  // max |u(dt) - u(dt/2)| when requested
  double dt = 0.0;
  std::size_t steps = 0;
};

// min(dx^2/(8 gamma_p), dx/(4 delta), 1/(4 (gamma_z + omega))).
double auto_dt(const Params& p, const SpatialGrid& grid);

// Method of lines: central differences, periodic closure, classical RK4.
FdResult fd_integrate(const Params& p, const InitialCondition& ic, double t_end, const SpatialGrid& grid,
                      const FdOptions& opt = {});

// One run reporting every requested time (sorted ascending, all > 0).
std::vector<FdResult> fd_integrate(const Params& p, const InitialCondition& ic, std::span<const double> times,
                                   const SpatialGrid& grid, const FdOptions& opt = {});

struct SpatialRichardson {
  FdResult fine;             // run on the requested grid
  BlochField extrapolated;   // (4 u_dx - u_2dx)/3 on the nodes shared with the 2dx grid
  double error_estimate = 0.0;  // max |u_dx - u_2dx| / 3, the O(dx^2) error of the fine run
};

// Runs the requested grid and the grid with half the points, same dt.
std::vector<SpatialRichardson> fd_richardson(const Params& p, const InitialCondition& ic, std::span<const double> times,
                                             const SpatialGrid& fine, const FdOptions& opt = {});

using MatrixSymbol = std::function<Eigen::Matrix3cd(double)>;

struct QuadKernel {
  std::vector<double> x;
  std::vector<Eigen::Matrix3cd> values;
  std::size_t n_xi = 0;  // intervals used at convergence
};

// (1/2pi) int_{-xi_max}^{xi_max} symbol(xi) e^{i xi x} dxi by the trapezoid rule,
// doubling n_xi until successive results differ by less than tol.
QuadKernel quad_inverse_fourier(const MatrixSymbol& symbol, std::span<const double> x, double xi_max,
                                std::size_t n_xi = 1024, double tol = 1e-10, std::size_t max_intervals = 1u << 22);

std::vector<std::complex<double>> quad_inverse_fourier_scalar(const std::function<std::complex<double>(double)>& symbol,
                                                               std::span<const double> x, double xi_max,
                                                               std::size_t n_xi = 1024, double tol = 1e-10,
                                                               std::size_t max_intervals = 1u << 22);

}  // namespace oqbm::oracle
