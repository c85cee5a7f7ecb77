#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace oqbm {

// Uniform periodic grid x_j = -L + j dx on [-L, L), dx = 2L/n, n a power of two.
class SpatialGrid {
 public:
  SpatialGrid(double half_width, std::size_t n_points);

  double half_width() const noexcept { return half_width_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return 2.0 * half_width_ / static_cast<double>(n_); }
  double node(std::size_t j) const noexcept {
    return -half_width_ + static_cast<double>(j) * spacing();
  }
  std::vector<double> nodes() const;

  // Frequency of FFT bin k: pi*k/L for k < n/2, pi*(k-n)/L otherwise.
  double frequency(std::size_t k) const noexcept;
  std::size_t nyquist_index() const noexcept { return n_ / 2; }
  std::vector<double> frequencies() const;

  bool operator==(const SpatialGrid& other) const noexcept {
    return half_width_ == other.half_width_ && n_ == other.n_;
  }

 private:
  double half_width_;
  std::size_t n_;
};

// Trapezoid rule over the node samples.
double trapezoid(std::span<const double> f, double dx);

// Smallest power of two that is >= n (and >= 2).
std::size_t next_pow2(std::size_t n);

}  // namespace oqbm
