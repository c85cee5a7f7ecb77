#include "oqbm/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace oqbm::fft {

namespace {

struct Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

std::mutex g_plan_mutex;

// Plans are created once per size under a lock and executed with the new-array API,
// which FFTW documents as thread safe.
const Plans& plans_for(std::size_t n) {
  static std::map<std::size_t, Plans> cache;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto* in = fftw_alloc_complex(n);
  auto* out = fftw_alloc_complex(n);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  Plans p;
  p.forward = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_FORWARD, flags);
  p.backward = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_BACKWARD, flags);
  fftw_free(in);
  fftw_free(out);
  return cache.emplace(n, p).first->second;
}

fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

// exp(-i xi_k x_0) with x_0 = -L is (-1)^k on this grid.
double phase_sign(std::size_t k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

std::vector<cplx> sample_spectrum(const SpatialGrid& grid, const std::function<cplx(double)>& F) {
  const auto n = grid.size();
  std::vector<cplx> s(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = grid.frequency(k);
    if (k == grid.nyquist_index()) {
      s[k] = 0.5 * (F(xi) + F(-xi));
    } else {
      s[k] = F(xi);
    }
  }
  return s;
}

std::vector<cplx> synthesize(const SpatialGrid& grid, std::span<const cplx> spectrum) {
  const auto n = grid.size();
  std::vector<cplx> in(n), out(n);
  for (std::size_t k = 0; k < n; ++k) in[k] = spectrum[k] * phase_sign(k);
  fftw_execute_dft(plans_for(n).backward, as_fftw(in.data()), as_fftw(out.data()));
  const double scale = 1.0 / (2.0 * grid.half_width());
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<cplx> analyze(const SpatialGrid& grid, std::span<const double> samples) {
  const auto n = grid.size();
  std::vector<cplx> in(n), out(n);
  for (std::size_t j = 0; j < n; ++j) in[j] = samples[j];
  fftw_execute_dft(plans_for(n).forward, as_fftw(in.data()), as_fftw(out.data()));
  const double dx = grid.spacing();
  for (std::size_t k = 0; k < n; ++k) out[k] *= dx * phase_sign(k);
  return out;
}

std::vector<double> real_part(std::span<const cplx> v) {
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].real();
  return r;
}

double max_imag(std::span<const cplx> v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z.imag()));
  return m;
}

const char* backend_version() { return fftw_version; }

}  // namespace oqbm::fft
