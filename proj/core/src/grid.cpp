#include "oqbm/grid.hpp"

#include <cmath>
#include <numbers>

#include "oqbm/error.hpp"

namespace oqbm {

SpatialGrid::SpatialGrid(double half_width, std::size_t n_points)
    : half_width_(half_width), n_(n_points) {
  if (!std::isfinite(half_width) || half_width <= 0.0) {
    fail(ErrorCode::InvalidGrid, "half width must be positive and finite");
  }
  if (n_points < 2 || (n_points & (n_points - 1)) != 0) {
    fail(ErrorCode::InvalidGrid, "n_points must be a power of two >= 2");
  }
}

std::vector<double> SpatialGrid::nodes() const {
  std::vector<double> x(n_);
  for (std::size_t j = 0; j < n_; ++j) x[j] = node(j);
  return x;
}

double SpatialGrid::frequency(std::size_t k) const noexcept {
  const double base = std::numbers::pi / half_width_;
  if (k < n_ / 2) return base * static_cast<double>(k);
  return base * (static_cast<double>(k) - static_cast<double>(n_));
}

std::vector<double> SpatialGrid::frequencies() const {
  std::vector<double> xi(n_);
  for (std::size_t k = 0; k < n_; ++k) xi[k] = frequency(k);
  return xi;
}

double trapezoid(std::span<const double> f, double dx) {
  if (f.empty()) return 0.0;
  double s = 0.0;
  for (double v : f) s += v;
  s -= 0.5 * (f.front() + f.back());
  return s * dx;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 2;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace oqbm
