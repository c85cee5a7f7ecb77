#pragma once

#include <string_view>

#include "oqbm/fields.hpp"
#include "oqbm/grid.hpp"
#include "oqbm/initial.hpp"
#include "oqbm/params.hpp"

namespace oqbm::app {

enum class Regime { Omega0, Delta0, Gammaz0, General };

std::string_view to_string(Regime r) noexcept;

// Closed-form regime when exactly one of omega, delta, gamma_z is within tol of zero.
Regime select_regime(const Params& p, double tol = 0.0);

// Regime snapped to its exact zero; rates within tol of zero are set to 0.
Params snap_params(const Params& p, Regime r);

struct Snapshot {
  BlochField field;
  std::string_view engine;  // which solver actually produced the field
};

Snapshot solve_snapshot(const Params& p, Regime r, const InitialCondition& ic, double t,
                        const SpatialGrid& grid);

}  // namespace oqbm::app
