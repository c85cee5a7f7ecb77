#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "oqbm/fields.hpp"

namespace test {

inline double linf(const std::vector<double>& a, const std::vector<double>& b) {
  double e = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) e = std::max(e, std::abs(a[j] - b[j]));
  return e;
}

inline double linf(const oqbm::BlochField& a, const oqbm::BlochField& b) {
  return std::max({linf(a.rho_plus, b.rho_plus), linf(a.c_i, b.c_i), linf(a.rho_minus, b.rho_minus),
                   linf(a.c_r, b.c_r)});
}

inline double min_of(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }
inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace test
