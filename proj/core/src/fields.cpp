#include "oqbm/fields.hpp"

#include "oqbm/error.hpp"

namespace oqbm {

void check_consistent(const DensityField& d) {
  const auto n = d.grid.size();
  if (d.rho11.size() != n || d.rho22.size() != n || d.rho12.size() != n) {
    fail(ErrorCode::GridMismatch, "density field arrays do not match the grid");
  }
}

void check_consistent(const BlochField& b) {
  const auto n = b.grid.size();
  if (b.rho_plus.size() != n || b.c_i.size() != n || b.rho_minus.size() != n ||
      b.c_r.size() != n) {
    fail(ErrorCode::GridMismatch, "Bloch field arrays do not match the grid");
  }
}

BlochField zero_bloch(const SpatialGrid& grid, double time) {
  const auto n = grid.size();
  return BlochField{grid, time, std::vector<double>(n), std::vector<double>(n),
                    std::vector<double>(n), std::vector<double>(n)};
}

BlochField to_bloch(const DensityField& d) {
  check_consistent(d);
  BlochField b = zero_bloch(d.grid, d.time);
  for (std::size_t j = 0; j < d.grid.size(); ++j) {
    b.rho_plus[j] = d.rho11[j] + d.rho22[j];
    b.rho_minus[j] = d.rho11[j] - d.rho22[j];
    b.c_r[j] = d.rho12[j].real();
    b.c_i[j] = d.rho12[j].imag();
  }
  return b;
}

DensityField from_bloch(const BlochField& b) {
  check_consistent(b);
  const auto n = b.grid.size();
  DensityField d{b.grid, b.time, std::vector<double>(n), std::vector<double>(n),
                 std::vector<std::complex<double>>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    d.rho11[j] = 0.5 * (b.rho_plus[j] + b.rho_minus[j]);
    d.rho22[j] = 0.5 * (b.rho_plus[j] - b.rho_minus[j]);
    d.rho12[j] = {b.c_r[j], b.c_i[j]};
  }
  return d;
}

double total_probability(const BlochField& b) {
  return trapezoid(b.rho_plus, b.grid.spacing());
}

}  // namespace oqbm
