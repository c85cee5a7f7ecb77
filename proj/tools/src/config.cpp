#include "oqbm_app/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "oqbm/error.hpp"

namespace oqbm::app {

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& msg) { fail(ErrorCode::ConfigError, msg); }

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "name", "gamma_p", "gamma_z", "delta",      "omega",    "ic",    "p",        "sigma1",
      "sigma2", "mu",    "k",       "sigma",      "a",        "b",     "r",        "q",
      "scale",  "half_width", "n_points", "times", "eps_tail", "regime_tol", "custom_file"};
  return keys;
}

double number(const json& j, const char* key) {
  if (!j.contains(key)) config_error(std::string("missing key '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number()) config_error(std::string("key '") + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) config_error(std::string("key '") + key + "' must be finite");
  return d;
}

double number_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

// Header x,rho11,rho22,re12,im12; one row per grid node.
DensityField read_custom(const std::filesystem::path& path, const SpatialGrid& grid) {
  std::ifstream in(path);
  if (!in) config_error("cannot open custom_file " + path.string());
  std::string line;
  if (!std::getline(in, line)) config_error("custom_file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,rho11,rho22,re12,im12") config_error("custom_file header must be x,rho11,rho22,re12,im12");
  DensityField d{grid, 0.0, {}, {}, {}};
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 5) config_error("custom_file row " + std::to_string(row) + " needs 5 columns");
    double v[5];
    for (int c = 0; c < 5; ++c) {
      try {
        std::size_t used = 0;
        v[c] = std::stod(cells[c], &used);
        if (used != cells[c].size()) throw std::invalid_argument(cells[c]);
      } catch (const std::exception&) {
        config_error("custom_file row " + std::to_string(row) + " has a malformed number");
      }
    }
    if (row < grid.size() && std::abs(v[0] - grid.node(row)) > 1e-9 * std::max(1.0, grid.half_width())) {
      config_error("custom_file x column does not match the configured grid");
    }
    d.rho11.push_back(v[1]);
    d.rho22.push_back(v[2]);
    d.rho12.emplace_back(v[3], v[4]);
    ++row;
  }
  if (row != grid.size()) config_error("custom_file has " + std::to_string(row) + " rows, grid has " +
                                       std::to_string(grid.size()));
  return d;
}

}  // namespace

RunConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) config_error("config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!known_keys().contains(key)) config_error("unknown key '" + key + "'");
  }
  RunConfig cfg;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) config_error("key 'name' must be a string");
    cfg.name = j.at("name").get<std::string>();
    if (cfg.name.empty() || cfg.name.find_first_of("/\\") != std::string::npos) config_error("bad run name");
  }
  cfg.params.gamma_p = number(j, "gamma_p");
  cfg.params.gamma_z = number_or(j, "gamma_z", 0.0);
  cfg.params.delta = number_or(j, "delta", 0.0);
  cfg.params.omega = number_or(j, "omega", 0.0);
  try {
    validate_params(cfg.params);
  } catch (const Error& e) {
    config_error(e.what());
  }

  if (j.contains("half_width")) cfg.half_width = number(j, "half_width");
  if (j.contains("n_points")) {
    const auto& v = j.at("n_points");
    if (!v.is_number_unsigned()) config_error("key 'n_points' must be a positive integer");
    cfg.n_points = v.get<std::size_t>();
  }
  cfg.eps_tail = number_or(j, "eps_tail", cfg.eps_tail);
  cfg.regime_tol = number_or(j, "regime_tol", cfg.regime_tol);
  if (!(cfg.eps_tail > 0.0) || cfg.regime_tol < 0.0) config_error("eps_tail must be > 0, regime_tol >= 0");

  if (!j.contains("times") || !j.at("times").is_array() || j.at("times").empty()) {
    config_error("key 'times' must be a non-empty array");
  }
  for (const auto& v : j.at("times")) {
    if (!v.is_number()) config_error("times must be numbers");
    const double t = v.get<double>();
    if (!std::isfinite(t) || t < 0.0) config_error("times must be finite and >= 0");
    cfg.times.push_back(t);
  }
  std::sort(cfg.times.begin(), cfg.times.end());
  cfg.times.erase(std::unique(cfg.times.begin(), cfg.times.end()), cfg.times.end());

  if (!j.contains("ic") || !j.at("ic").is_string()) config_error("key 'ic' must be a string");
  cfg.ic_kind = j.at("ic").get<std::string>();
  const auto& k = cfg.ic_kind;
  if (k == "gaussian_mixture") {
    cfg.ic = GaussianMixture{number(j, "p"), number(j, "sigma1"), number(j, "sigma2")};
  } else if (k == "gaussian_coherent") {
    cfg.ic = GaussianCoherent{number(j, "p"), number(j, "mu"), number(j, "k"), number(j, "sigma")};
  } else if (k == "laplace_mixture") {
    cfg.ic = LaplaceMixture{number(j, "p"), number(j, "a"), number(j, "b")};
  } else if (k == "uniform_mixture") {
    cfg.ic = UniformMixture{number(j, "p"), number(j, "a"), number(j, "b")};
  } else if (k == "laplace_coherent") {
    double scale = 0.0;
    if (j.contains("scale")) {
      scale = number(j, "scale");
    } else if (cfg.params.delta > 0.0 && cfg.params.omega > 0.0) {
      scale = cfg.params.delta / cfg.params.omega;
    } else {
      config_error("laplace_coherent needs 'scale' unless delta and omega are positive");
    }
    cfg.ic = LaplaceCoherent{number(j, "p"), number_or(j, "r", 0.0), number_or(j, "q", 0.0), scale};
  } else if (k == "custom") {
    if (!j.contains("custom_file") || !j.at("custom_file").is_string()) config_error("custom ic needs 'custom_file'");
    if (!cfg.half_width) config_error("custom ic needs an explicit 'half_width'");
    cfg.custom_file = j.at("custom_file").get<std::string>();
    std::filesystem::path file(cfg.custom_file);
    if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
    try {
      const SpatialGrid grid(*cfg.half_width, cfg.n_points);
      cfg.ic = CustomInitial{read_custom(file, grid)};
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ConfigError) throw;
      config_error(e.what());
    }
  } else {
    config_error("unknown ic '" + k + "'");
  }
  try {
    validate_initial(cfg.ic);
    if (cfg.half_width) SpatialGrid(*cfg.half_width, cfg.n_points);
    else SpatialGrid(1.0, cfg.n_points);
  } catch (const Error& e) {
    config_error(e.what());
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    config_error(std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j, path.parent_path());
}

json to_json(const RunConfig& cfg) {
  json j;
  j["name"] = cfg.name;
  j["gamma_p"] = cfg.params.gamma_p;
  j["gamma_z"] = cfg.params.gamma_z;
  j["delta"] = cfg.params.delta;
  j["omega"] = cfg.params.omega;
  j["ic"] = cfg.ic_kind;
  std::visit(
      [&](const auto& ic) {
        using T = std::decay_t<decltype(ic)>;
        if constexpr (std::is_same_v<T, GaussianMixture>) {
          j["p"] = ic.p;
          j["sigma1"] = ic.sigma1;
          j["sigma2"] = ic.sigma2;
        } else if constexpr (std::is_same_v<T, GaussianCoherent>) {
          j["p"] = ic.p;
          j["mu"] = ic.mu;
          j["k"] = ic.k;
          j["sigma"] = ic.sigma;
        } else if constexpr (std::is_same_v<T, LaplaceMixture> || std::is_same_v<T, UniformMixture>) {
          j["p"] = ic.p;
          j["a"] = ic.a;
          j["b"] = ic.b;
        } else if constexpr (std::is_same_v<T, LaplaceCoherent>) {
          j["p"] = ic.p;
          j["r"] = ic.r;
          j["q"] = ic.q;
          j["scale"] = ic.scale;
        } else {
          j["custom_file"] = cfg.custom_file;
        }
      },
      cfg.ic);
  j["half_width"] = resolved_half_width(cfg);
  j["n_points"] = cfg.n_points;
  j["times"] = cfg.times;
  j["eps_tail"] = cfg.eps_tail;
  j["regime_tol"] = cfg.regime_tol;
  return j;
}

double resolved_half_width(const RunConfig& cfg) {
  if (cfg.half_width) return *cfg.half_width;
  return suggest_half_width(cfg.ic, cfg.params, cfg.times.back(), cfg.eps_tail);
}

}  // namespace oqbm::app
