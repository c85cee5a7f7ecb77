#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "oqbm/grid.hpp"

namespace oqbm::fft {

using cplx = std::complex<double>;

// Samples F(xi_k) in FFT bin order; the Nyquist bin takes the mean of F(+xi) and F(-xi).
std::vector<cplx> sample_spectrum(const SpatialGrid& grid, const std::function<cplx(double)>& F);

// f(x_j) = (1/2L) sum_k F_k exp(i xi_k x_j).
std::vector<cplx> synthesize(const SpatialGrid& grid, std::span<const cplx> spectrum);

// F_k = dx sum_j f_j exp(-i xi_k x_j).
std::vector<cplx> analyze(const SpatialGrid& grid, std::span<const double> samples);

std::vector<double> real_part(std::span<const cplx> v);
double max_imag(std::span<const cplx> v);

const char* backend_version();

}  // namespace oqbm::fft
