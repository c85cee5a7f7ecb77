#pragma once

#include <complex>
#include <vector>

#include "oqbm/grid.hpp"

namespace oqbm {

struct DensityField {
  SpatialGrid grid;
  double time = 0.0;
  std::vector<double> rho11;
  std::vector<double> rho22;
  std::vector<std::complex<double>> rho12;
};

// u = (rho_plus, c_i, rho_minus) plus the decoupled real coherence c_r.
struct BlochField {
  SpatialGrid grid;
  double time = 0.0;
  std::vector<double> rho_plus;
  std::vector<double> c_i;
  std::vector<double> rho_minus;
  std::vector<double> c_r;
};

BlochField to_bloch(const DensityField& d);
DensityField from_bloch(const BlochField& b);

BlochField zero_bloch(const SpatialGrid& grid, double time);

// Trapezoid integral of rho_plus.
double total_probability(const BlochField& b);

// Throws GridMismatch when array lengths disagree with the grid.
void check_consistent(const DensityField& d);
void check_consistent(const BlochField& b);

}  // namespace oqbm
