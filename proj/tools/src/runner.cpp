#include "oqbm_app/runner.hpp"

#include <Eigen/Core>
#include <algorithm>

#include "oqbm/fourier.hpp"
#include "oqbm/oqbm.hpp"
#include "oqbm_app/dispatch.hpp"
#include "oqbm_app/output.hpp"

namespace oqbm::app {

namespace {

nlohmann::json versions() {
  return {{"oqbm", oqbm::version},
          {"fftw", fft::backend_version()},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)}};
}

double min_of(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }

}  // namespace

std::vector<std::filesystem::path> run_solve(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  const Regime regime = select_regime(cfg.params, cfg.regime_tol);
  const Params p = snap_params(cfg.params, regime);
  const SpatialGrid grid(resolved_half_width(cfg), cfg.n_points);
  // fail before anything is written
  sample_initial(cfg.ic, grid, cfg.eps_tail);

  std::vector<std::filesystem::path> files;
  nlohmann::json snaps = nlohmann::json::array();
  for (double t : cfg.times) {
    const Snapshot s = solve_snapshot(p, regime, cfg.ic, t, grid);
    const auto path = out_dir / snapshot_filename(cfg.name, t);
    write_snapshot_csv(path, s.field);
    files.push_back(path);
    snaps.push_back({{"t", t},
                     {"file", path.filename().string()},
                     {"engine", s.engine},
                     {"mass", total_probability(s.field)},
                     {"min_P", min_of(s.field.rho_plus)}});
  }
  nlohmann::json manifest{{"config", to_json(cfg)},
                          {"regime", to_string(regime)},
                          {"params_used", {{"gamma_p", p.gamma_p}, {"gamma_z", p.gamma_z}, {"delta", p.delta}, {"omega", p.omega}}},
                          {"grid", {{"half_width", grid.half_width()}, {"n_points", grid.size()}, {"dx", grid.spacing()}}},
                          {"tolerances", {{"eps_tail", cfg.eps_tail}, {"regime_tol", cfg.regime_tol}}},
                          {"threads", thread_count()},
                          {"versions", versions()},
                          {"snapshots", snaps}};
  const auto mpath = out_dir / (cfg.name + "_manifest.json");
  write_json(mpath, manifest);
  files.push_back(mpath);
  return files;
}

std::vector<std::filesystem::path> run_figure(const std::string& name, const std::filesystem::path& out_dir) {
  const auto scenarios = figure_scenarios(name);
  std::vector<std::filesystem::path> files;
  nlohmann::json panels = nlohmann::json::array();
  for (const auto& sc : scenarios) {
    const auto x = plot_nodes(sc);
    std::vector<std::pair<double, std::vector<double>>> series;
    for (double t : sc.times) series.emplace_back(t, panel_values(sc, t, x));
    const auto path = out_dir / (name + "_" + sc.panel + ".csv");
    write_panel_csv(path, sc.quantity, x, series);
    files.push_back(path);
    nlohmann::json ic;
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, GaussianMixture>) ic = {{"ic", "gaussian_mixture"}, {"p", v.p}, {"sigma1", v.sigma1}, {"sigma2", v.sigma2}};
          else if constexpr (std::is_same_v<T, GaussianCoherent>) ic = {{"ic", "gaussian_coherent"}, {"p", v.p}, {"mu", v.mu}, {"k", v.k}, {"sigma", v.sigma}};
          else if constexpr (std::is_same_v<T, LaplaceMixture>) ic = {{"ic", "laplace_mixture"}, {"p", v.p}, {"a", v.a}, {"b", v.b}};
          else if constexpr (std::is_same_v<T, UniformMixture>) ic = {{"ic", "uniform_mixture"}, {"p", v.p}, {"a", v.a}, {"b", v.b}};
          else if constexpr (std::is_same_v<T, LaplaceCoherent>) ic = {{"ic", "laplace_coherent"}, {"p", v.p}, {"r", v.r}, {"q", v.q}, {"scale", v.scale}};
        },
        sc.ic);
    panels.push_back({{"panel", sc.panel},
                      {"file", path.filename().string()},
                      {"quantity", sc.quantity},
                      {"formula", sc.formula},
                      {"params", {{"gamma_p", sc.params.gamma_p}, {"gamma_z", sc.params.gamma_z}, {"delta", sc.params.delta}, {"omega", sc.params.omega}}},
                      {"initial", ic},
                      {"times", sc.times},
                      {"x", {{"half_width", sc.plot_half_width}, {"points", sc.plot_points}}}});
  }
  const auto mpath = out_dir / (name + "_manifest.json");
  write_json(mpath, {{"figure", name}, {"panels", panels}, {"versions", versions()}});
  files.push_back(mpath);
  return files;
}

Level parse_level(const std::string& s) {
  if (s == "fast") return Level::Fast;
  if (s == "full") return Level::Full;
  fail(ErrorCode::ConfigError, "level must be fast or full");
}

int exit_code(ErrorCode code) noexcept { return 10 + static_cast<int>(code); }

}  // namespace oqbm::app
