#pragma once

#include <string>
#include <vector>

#include "oqbm/grid.hpp"
#include "oqbm/initial.hpp"
#include "oqbm/params.hpp"

namespace oqbm::app {

// One panel of a figure: the scenario, the quantity drawn and where it is sampled.
struct FigureScenario {
  std::string figure;
  std::string panel;     // "left" or "right"
  std::string quantity;  // "P" or "Q"
  std::string formula;   // closed form used for the panel values
  Params params;
  InitialCondition ic;
  SpatialGrid grid;            // solver grid, wide enough for the tail rule
  double plot_half_width = 0;  // panel values cover [-w, w]
  std::size_t plot_points = 0;
  std::vector<double> times;
};

std::vector<std::string> figure_names();

// Throws UnknownFigure.
std::vector<FigureScenario> figure_scenarios(const std::string& name);

std::vector<double> plot_nodes(const FigureScenario& sc);

// Panel quantity from the figure's closed form at the given points.
std::vector<double> panel_values(const FigureScenario& sc, double t, const std::vector<double>& x);

}  // namespace oqbm::app
