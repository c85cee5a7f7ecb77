#pragma once

#include "oqbm/closed_delta0.hpp"
#include "oqbm/closed_gammaz0.hpp"
#include "oqbm/closed_omega0.hpp"
#include "oqbm/error.hpp"
#include "oqbm/fields.hpp"
#include "oqbm/fourier.hpp"
#include "oqbm/grid.hpp"
#include "oqbm/initial.hpp"
#include "oqbm/oracle.hpp"
#include "oqbm/parallel.hpp"
#include "oqbm/params.hpp"
#include "oqbm/quadrature.hpp"
#include "oqbm/specfun.hpp"
#include "oqbm/spectral.hpp"

namespace oqbm {
inline constexpr const char* version = "0.1.0";
}
