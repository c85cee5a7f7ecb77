#include "oqbm_app/dispatch.hpp"

#include <cmath>

#include "oqbm/closed_delta0.hpp"
#include "oqbm/closed_gammaz0.hpp"
#include "oqbm/closed_omega0.hpp"
#include "oqbm/spectral.hpp"

namespace oqbm::app {

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::Omega0: return "omega0";
    case Regime::Delta0: return "delta0";
    case Regime::Gammaz0: return "gammaz0";
    case Regime::General: return "general";
  }
  return "general";
}

Regime select_regime(const Params& p, double tol) {
  const bool w0 = std::abs(p.omega) <= tol;
  const bool d0 = std::abs(p.delta) <= tol;
  const bool g0 = std::abs(p.gamma_z) <= tol;
  if (w0 + d0 + g0 != 1) return Regime::General;
  if (w0) return Regime::Omega0;
  if (d0) return Regime::Delta0;
  return Regime::Gammaz0;
}

Params snap_params(const Params& p, Regime r) {
  Params q = p;
  if (r == Regime::Omega0) q.omega = 0.0;
  if (r == Regime::Delta0) q.delta = 0.0;
  if (r == Regime::Gammaz0) q.gamma_z = 0.0;
  return q;
}

Snapshot solve_snapshot(const Params& p, Regime r, const InitialCondition& ic, double t,
                        const SpatialGrid& grid) {
  const bool custom = std::holds_alternative<CustomInitial>(ic);
  if (t == 0.0) return {to_bloch(sample_initial(ic, grid)), "initial"};
  switch (r) {
    case Regime::Omega0:
      return {omega0::solve_omega0(p, ic, t, grid), custom ? "spectral" : "closed_omega0"};
    case Regime::Delta0:
      return {delta0::solve_delta0(p, ic, t, grid), custom ? "spectral" : "closed_delta0"};
    case Regime::Gammaz0:
      if (const auto* l = std::get_if<LaplaceCoherent>(&ic);
          l && std::abs(l->scale - p.delta / p.omega) <= 1e-12 * (p.delta / p.omega)) {
        return {gammaz0::solve_laplace_coherent(p, *l, t, grid), "closed_gammaz0"};
      }
      break;
    case Regime::General:
      break;
  }
  return {spectral::solve(p, ic, t, grid), "spectral"};
}

}  // namespace oqbm::app
