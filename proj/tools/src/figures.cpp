#include "oqbm_app/figures.hpp"

#include "oqbm/closed_delta0.hpp"
#include "oqbm/closed_gammaz0.hpp"
#include "oqbm/closed_omega0.hpp"
#include "oqbm/error.hpp"
#include "oqbm/parallel.hpp"

namespace oqbm::app {

namespace {

const std::vector<double> kTimes200{0.0, 50.0, 100.0, 150.0, 200.0};
const std::vector<double> kTimes100{0.0, 25.0, 50.0, 75.0, 100.0};

const Params kOmega0{1e-3, 1e-3, 1e-2, 0.0};
const Params kDelta0{1e-3, 1e-3, 0.0, 1e-2};
const Params kGammaz0{1e-2, 0.0, 1e-1, 1e-2};

FigureScenario scenario(std::string fig, std::string panel, std::string quantity, std::string formula,
                        const Params& p, InitialCondition ic, SpatialGrid grid, double plot_w,
                        const std::vector<double>& times) {
  return FigureScenario{std::move(fig), std::move(panel), std::move(quantity), std::move(formula), p,
                        std::move(ic), grid, plot_w, 2001, times};
}

std::vector<FigureScenario> omega0_pair(const std::string& fig, const InitialCondition& ic, SpatialGrid grid,
                                        double plot_w, const std::string& formula) {
  return {scenario(fig, "left", "P", formula, kOmega0, ic, grid, plot_w, kTimes200),
          scenario(fig, "right", "Q", formula, kOmega0, ic, grid, plot_w, kTimes200)};
}

std::vector<FigureScenario> gammaz0_pair(const std::string& fig, const std::string& quantity,
                                         const std::string& formula) {
  // Laplace tails of scale 10 need L ~ 216; n = 2^16 keeps the kink's trapezoid error below 1e-7
  const SpatialGrid grid(224.0, 1u << 16);
  return {scenario(fig, "left", quantity, formula, kGammaz0, LaplaceCoherent::for_params(0.25, 0.0, 0.0, kGammaz0),
                   grid, 60.0, kTimes100),
          scenario(fig, "right", quantity, formula, kGammaz0,
                   LaplaceCoherent::for_params(0.25, 0.0, -0.5, kGammaz0), grid, 60.0, kTimes100)};
}

double initial_value(const InitialCondition& ic, const std::string& quantity, double x) {
  const auto d = density_profiles(ic);
  const double a = evaluate(d->rho11, x), b = evaluate(d->rho22, x);
  return quantity == "P" ? a + b : a - b;
}

double closed_value(const FigureScenario& sc, double t, double x) {
  const bool density = sc.quantity == "P";
  return std::visit(
      [&](const auto& ic) -> double {
        using T = std::decay_t<decltype(ic)>;
        if constexpr (std::is_same_v<T, GaussianMixture>) {
          if (sc.params.omega == 0.0) {
            const auto v = omega0::gaussian_solution(sc.params, ic, t, x);
            return density ? v.density : v.imbalance;
          }
          return density ? delta0::density_delta0(sc.params, ic, t, x) : delta0::imbalance_gaussian(sc.params, ic, t, x);
        } else if constexpr (std::is_same_v<T, GaussianCoherent>) {
          return density ? delta0::density_delta0(sc.params, ic, t, x) : delta0::imbalance_coherent(sc.params, ic, t, x);
        } else if constexpr (std::is_same_v<T, LaplaceMixture>) {
          const auto v = omega0::laplace_solution(sc.params, ic, t, x);
          return density ? v.density : v.imbalance;
        } else if constexpr (std::is_same_v<T, UniformMixture>) {
          const auto v = omega0::uniform_solution(sc.params, ic, t, x);
          return density ? v.density : v.imbalance;
        } else if constexpr (std::is_same_v<T, LaplaceCoherent>) {
          return density ? gammaz0::density_pdfF(sc.params, ic, t, x) : gammaz0::imbalance_popimbz(sc.params, ic, t, x);
        } else {
          fail(ErrorCode::UnknownFigure, "figure scenarios use analytic initial data");
        }
      },
      sc.ic);
}

}  // namespace

std::vector<std::string> figure_names() { return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"}; }

std::vector<FigureScenario> figure_scenarios(const std::string& name) {
  if (name == "fig1") return omega0_pair(name, GaussianMixture{0.75, 1.0, 2.0}, SpatialGrid(24.0, 4096), 12.0, "PDF1/PI11");
  if (name == "fig2") return omega0_pair(name, LaplaceMixture{0.25, 1.0, 2.0}, SpatialGrid(48.0, 1u << 17), 20.0, "PDF2");
  // box edges at +-2, +-3 fall on nodes of this grid
  if (name == "fig3") return omega0_pair(name, UniformMixture{0.75, 3.0, 2.0}, SpatialGrid(16.0, 1u << 14), 12.0, "PDF3");
  if (name == "fig4") return gammaz0_pair(name, "P", "pdfF");
  if (name == "fig5") return gammaz0_pair(name, "Q", "popimbz");
  if (name == "fig6") {
    const SpatialGrid grid(16.0, 4096);
    return {scenario(name, "left", "Q", "PIqqq", kDelta0, GaussianMixture{0.75, 2.0, 1.0}, grid, 10.0, kTimes200),
            scenario(name, "right", "Q", "PIqqqq", kDelta0, GaussianCoherent{0.75, 0.8, 1.0, 1.0}, grid, 10.0,
                     kTimes200)};
  }
  fail(ErrorCode::UnknownFigure, "unknown figure '" + name + "'");
}

std::vector<double> plot_nodes(const FigureScenario& sc) {
  std::vector<double> x(sc.plot_points);
  const double w = sc.plot_half_width;
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = -w + 2.0 * w * static_cast<double>(j) / static_cast<double>(x.size() - 1);
  return x;
}

std::vector<double> panel_values(const FigureScenario& sc, double t, const std::vector<double>& x) {
  std::vector<double> v(x.size());
  parallel_for(x.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t j = b; j < e; ++j) v[j] = t == 0.0 ? initial_value(sc.ic, sc.quantity, x[j]) : closed_value(sc, t, x[j]);
  }, 16);
  return v;
}

}  // namespace oqbm::app
