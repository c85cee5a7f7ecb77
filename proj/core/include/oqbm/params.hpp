#pragma once

namespace oqbm {

// Physical rates of the master equation.
struct Params {
  double gamma_p = 0.0;  // position diffusion, must be > 0
  double gamma_z = 0.0;  // dephasing
  double delta = 0.0;    // drift / coupling
  double omega = 0.0;    // driving amplitude
};

// Returns p unchanged or throws NonFinite / NonPositiveDiffusion / NegativeRate.
Params validate_params(const Params& p);

}  // namespace oqbm
