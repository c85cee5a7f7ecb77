#include "oqbm/params.hpp"

#include <cmath>

#include "oqbm/error.hpp"

namespace oqbm {

Params validate_params(const Params& p) {
  for (double v : {p.gamma_p, p.gamma_z, p.delta, p.omega}) {
    if (!std::isfinite(v)) fail(ErrorCode::NonFinite, "rates must be finite");
  }
  if (p.gamma_p <= 0.0) fail(ErrorCode::NonPositiveDiffusion, "gamma_p must be > 0");
  if (p.gamma_z < 0.0 || p.delta < 0.0 || p.omega < 0.0) {
    fail(ErrorCode::NegativeRate, "gamma_z, delta and omega must be >= 0");
  }
  return p;
}

}  // namespace oqbm
