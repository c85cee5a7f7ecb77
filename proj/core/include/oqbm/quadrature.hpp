#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace oqbm {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Cached Gauss-Legendre rule of the given order.
const GaussRule& gauss_legendre(std::size_t order);

// Gauss-Legendre nodes and weights mapped to [0, pi].
class ThetaQuadrature {
 public:
  explicit ThetaQuadrature(std::size_t order);
  std::size_t order() const noexcept { return theta_.size(); }
  std::span<const double> nodes() const noexcept { return theta_; }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  std::vector<double> theta_;
  std::vector<double> weights_;
};

// Composite Gauss-Legendre over [a, b] split at the sorted breakpoints inside it.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breakpoints = {}, std::size_t panels = 16,
                 std::size_t order = 20);

}  // namespace oqbm
