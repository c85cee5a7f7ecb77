#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "oqbm/fields.hpp"
#include "oqbm/params.hpp"

namespace oqbm {

// Elementary unit-mass shapes centred at 0 (the wave shapes carry a cos/sin factor).
struct GaussianShape {
  double sigma;
};
struct LaplaceShape {
  double scale;  // e^{-|x|/a} / (2a)
};
struct BoxShape {
  double half_width;  // indicator of [-a, a] / (2a), half value at the jumps
};
struct GaussianWaveShape {
  double sigma;
  double k;
  bool sine;  // false: N(0, sigma^2) cos(kx), true: N(0, sigma^2) sin(kx)
};

using Shape = std::variant<GaussianShape, LaplaceShape, BoxShape, GaussianWaveShape>;

struct Term {
  double weight;
  Shape shape;
};
using Profile = std::vector<Term>;

double evaluate(const Shape& s, double x);
double evaluate(const Profile& f, double x);
std::complex<double> fourier(const Shape& s, double xi);
std::complex<double> fourier(const Profile& f, double xi);
// Bound on the absolute mass of the shape outside [-R, R].
double tail_mass(const Shape& s, double R);
double tail_mass(const Profile& f, double R);

struct GaussianMixture {
  double p, sigma1, sigma2;
};
struct GaussianCoherent {
  double p, mu, k, sigma;
};
struct LaplaceMixture {
  double p, a, b;
};
struct UniformMixture {
  double p, a, b;
};
// Laplace profile with scale delta/omega and coherence (r + i q) sqrt(p(1-p)).
struct LaplaceCoherent {
  double p, r, q, scale;
  static LaplaceCoherent for_params(double p, double r, double q, const Params& params);
};
struct CustomInitial {
  DensityField field;
};

using InitialCondition = std::variant<GaussianMixture, GaussianCoherent, LaplaceMixture,
                                      UniformMixture, LaplaceCoherent, CustomInitial>;

void validate_initial(const InitialCondition& ic);

struct DensityProfiles {
  Profile rho11, rho22, re12, im12;
};
struct BlochProfiles {
  Profile rho_plus, c_i, rho_minus, c_r;
};

// Analytic components; empty for CustomInitial.
std::optional<DensityProfiles> density_profiles(const InitialCondition& ic);
std::optional<BlochProfiles> bloch_profiles(const InitialCondition& ic);

DensityField sample_initial(const InitialCondition& ic, const SpatialGrid& grid,
                            double eps_tail = 1e-8);

// Half width so that the initial tail mass plus drift 2*delta*t_max plus six
// diffusion standard deviations fit inside [-L, L].
double suggest_half_width(const InitialCondition& ic, const Params& p, double t_max,
                          double eps_tail = 1e-8);

}  // namespace oqbm
