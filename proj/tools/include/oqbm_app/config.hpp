#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oqbm/initial.hpp"
#include "oqbm/params.hpp"

namespace oqbm::app {

struct RunConfig {
  std::string name = "run";
  Params params;
  std::string ic_kind;
  InitialCondition ic;
  std::optional<double> half_width;  // derived from the tail rule when absent
  std::size_t n_points = 4096;
  std::vector<double> times;
  double eps_tail = 1e-8;
  double regime_tol = 0.0;
  std::string custom_file;
};

// Flat keys: name, gamma_p, gamma_z, delta, omega, ic, p, sigma1, sigma2, mu, k, sigma,
// a, b, r, q, half_width, n_points, times, eps_tail, regime_tol, custom_file.
RunConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& cfg);

double resolved_half_width(const RunConfig& cfg);

}  // namespace oqbm::app
