#include "oqbm/initial.hpp"

#include <cmath>
#include <numbers>

#include "oqbm/error.hpp"

namespace oqbm {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343818684758586311649;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double normal(double x, double sigma) {
  const double z = x / sigma;
  return kInvSqrt2Pi / sigma * std::exp(-0.5 * z * z);
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::InvalidInitialCondition, what);
}

void validate_probability(double p) { require(std::isfinite(p) && p > 0.0 && p < 1.0, "p must lie in (0,1)"); }

}  // namespace

double evaluate(const Shape& s, double x) {
  return std::visit(
      overloaded{
          [x](const GaussianShape& g) { return normal(x, g.sigma); },
          [x](const LaplaceShape& l) { return std::exp(-std::abs(x) / l.scale) / (2.0 * l.scale); },
          [x](const BoxShape& b) {
            const double a = b.half_width;
            const double d = std::abs(x) - a;
            if (std::abs(d) <= 1e-12 * std::max(1.0, a)) return 0.25 / a;
            return d < 0.0 ? 0.5 / a : 0.0;
          },
          [x](const GaussianWaveShape& w) {
            return normal(x, w.sigma) * (w.sine ? std::sin(w.k * x) : std::cos(w.k * x));
          },
      },
      s);
}

double evaluate(const Profile& f, double x) {
  double v = 0.0;
  for (const auto& t : f) v += t.weight * evaluate(t.shape, x);
  return v;
}

std::complex<double> fourier(const Shape& s, double xi) {
  using C = std::complex<double>;
  return std::visit(
      overloaded{
          [xi](const GaussianShape& g) { return C(std::exp(-0.5 * g.sigma * g.sigma * xi * xi)); },
          [xi](const LaplaceShape& l) { return C(1.0 / (1.0 + l.scale * l.scale * xi * xi)); },
          [xi](const BoxShape& b) {
            const double z = b.half_width * xi;
            if (std::abs(z) < 1e-4) return C(1.0 - z * z / 6.0 + z * z * z * z / 120.0);
            return C(std::sin(z) / z);
          },
          [xi](const GaussianWaveShape& w) {
            const double s2 = w.sigma * w.sigma;
            const double em = std::exp(-0.5 * s2 * (xi - w.k) * (xi - w.k));
            const double ep = std::exp(-0.5 * s2 * (xi + w.k) * (xi + w.k));
            if (w.sine) return C(0.0, -0.5 * (em - ep));
            return C(0.5 * (em + ep));
          },
      },
      s);
}

std::complex<double> fourier(const Profile& f, double xi) {
  std::complex<double> v = 0.0;
  for (const auto& t : f) v += t.weight * fourier(t.shape, xi);
  return v;
}

double tail_mass(const Shape& s, double R) {
  if (R <= 0.0) return 1.0;
  return std::visit(
      overloaded{
          [R](const GaussianShape& g) { return std::erfc(R / (std::numbers::sqrt2 * g.sigma)); },
          [R](const LaplaceShape& l) { return std::exp(-R / l.scale); },
          [R](const BoxShape& b) { return R >= b.half_width ? 0.0 : 1.0; },
          [R](const GaussianWaveShape& w) { return std::erfc(R / (std::numbers::sqrt2 * w.sigma)); },
      },
      s);
}

double tail_mass(const Profile& f, double R) {
  double m = 0.0;
  for (const auto& t : f) m += std::abs(t.weight) * tail_mass(t.shape, R);
  return m;
}

LaplaceCoherent LaplaceCoherent::for_params(double p, double r, double q, const Params& params) {
  if (!(params.delta > 0.0) || !(params.omega > 0.0)) {
    fail(ErrorCode::DegenerateParams, "Laplace coherent data needs delta > 0 and omega > 0");
  }
  return LaplaceCoherent{p, r, q, params.delta / params.omega};
}

void validate_initial(const InitialCondition& ic) {
  std::visit(overloaded{
                 [](const GaussianMixture& g) {
                   validate_probability(g.p);
                   require(positive_finite(g.sigma1) && positive_finite(g.sigma2), "sigmas must be > 0");
                 },
                 [](const GaussianCoherent& g) {
                   validate_probability(g.p);
                   require(std::isfinite(g.mu) && g.mu > 0.0 && g.mu < 1.0, "mu must lie in (0,1)");
                   require(std::isfinite(g.k), "k must be finite");
                   require(positive_finite(g.sigma), "sigma must be > 0");
                 },
                 [](const LaplaceMixture& l) {
                   validate_probability(l.p);
                   require(positive_finite(l.a) && positive_finite(l.b), "scales must be > 0");
                 },
                 [](const UniformMixture& u) {
                   validate_probability(u.p);
                   require(positive_finite(u.a) && positive_finite(u.b), "half widths must be > 0");
                 },
                 [](const LaplaceCoherent& l) {
                   validate_probability(l.p);
                   require(std::isfinite(l.r) && std::isfinite(l.q), "r, q must be finite");
                   require(l.r * l.r + l.q * l.q <= 1.0 + 1e-15, "r^2 + q^2 must be <= 1");
                   require(positive_finite(l.scale), "scale must be > 0");
                 },
                 [](const CustomInitial& c) {
                   check_consistent(c.field);
                   const double dx = c.field.grid.spacing();
                   std::vector<double> trace(c.field.grid.size());
                   for (std::size_t j = 0; j < trace.size(); ++j) {
                     const double a = c.field.rho11[j], b = c.field.rho22[j];
                     const auto z = c.field.rho12[j];
                     require(std::isfinite(a) && std::isfinite(b) && std::isfinite(z.real()) &&
                                 std::isfinite(z.imag()),
                             "custom field must be finite");
                     require(a >= -1e-12 && b >= -1e-12, "custom populations must be non-negative");
                     trace[j] = a + b;
                   }
                   require(std::abs(trapezoid(trace, dx) - 1.0) <= 1e-6, "custom field must have unit trace");
                 },
             },
             ic);
}

std::optional<DensityProfiles> density_profiles(const InitialCondition& ic) {
  return std::visit(
      overloaded{
          [](const GaussianMixture& g) -> std::optional<DensityProfiles> {
            return DensityProfiles{{{g.p, GaussianShape{g.sigma1}}},
                                   {{1.0 - g.p, GaussianShape{g.sigma2}}},
                                   {},
                                   {}};
          },
          [](const GaussianCoherent& g) -> std::optional<DensityProfiles> {
            const double c = g.mu * std::sqrt(g.p * (1.0 - g.p));
            return DensityProfiles{{{g.p, GaussianShape{g.sigma}}},
                                   {{1.0 - g.p, GaussianShape{g.sigma}}},
                                   {{c, GaussianWaveShape{g.sigma, g.k, false}}},
                                   {{c, GaussianWaveShape{g.sigma, g.k, true}}}};
          },
          [](const LaplaceMixture& l) -> std::optional<DensityProfiles> {
            return DensityProfiles{{{l.p, LaplaceShape{l.a}}}, {{1.0 - l.p, LaplaceShape{l.b}}}, {}, {}};
          },
          [](const UniformMixture& u) -> std::optional<DensityProfiles> {
            return DensityProfiles{{{u.p, BoxShape{u.a}}}, {{1.0 - u.p, BoxShape{u.b}}}, {}, {}};
          },
          [](const LaplaceCoherent& l) -> std::optional<DensityProfiles> {
            const double s = std::sqrt(l.p * (1.0 - l.p));
            DensityProfiles d{{{l.p, LaplaceShape{l.scale}}}, {{1.0 - l.p, LaplaceShape{l.scale}}}, {}, {}};
            if (l.r != 0.0) d.re12.push_back({l.r * s, LaplaceShape{l.scale}});
            if (l.q != 0.0) d.im12.push_back({l.q * s, LaplaceShape{l.scale}});
            return d;
          },
          [](const CustomInitial&) -> std::optional<DensityProfiles> { return std::nullopt; },
      },
      ic);
}

std::optional<BlochProfiles> bloch_profiles(const InitialCondition& ic) {
  const auto d = density_profiles(ic);
  if (!d) return std::nullopt;
  BlochProfiles b;
  b.rho_plus = d->rho11;
  b.rho_plus.insert(b.rho_plus.end(), d->rho22.begin(), d->rho22.end());
  b.rho_minus = d->rho11;
  for (auto t : d->rho22) {
    t.weight = -t.weight;
    b.rho_minus.push_back(t);
  }
  b.c_r = d->re12;
  b.c_i = d->im12;
  return b;
}

DensityField sample_initial(const InitialCondition& ic, const SpatialGrid& grid, double eps_tail) {
  validate_initial(ic);
  if (const auto* c = std::get_if<CustomInitial>(&ic)) {
    if (!(c->field.grid == grid)) fail(ErrorCode::GridMismatch, "custom field lives on a different grid");
    return DensityField{grid, 0.0, c->field.rho11, c->field.rho22, c->field.rho12};
  }
  const auto prof = *density_profiles(ic);
  const double L = grid.half_width();
  const double tail = tail_mass(prof.rho11, L) + tail_mass(prof.rho22, L);
  if (tail > eps_tail) {
    fail(ErrorCode::DomainTooNarrow, "initial tail mass beyond the grid exceeds eps_tail");
  }
  const auto n = grid.size();
  DensityField d{grid, 0.0, std::vector<double>(n), std::vector<double>(n),
                 std::vector<std::complex<double>>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    const double x = grid.node(j);
    d.rho11[j] = evaluate(prof.rho11, x);
    d.rho22[j] = evaluate(prof.rho22, x);
    d.rho12[j] = {evaluate(prof.re12, x), evaluate(prof.im12, x)};
  }
  return d;
}

double suggest_half_width(const InitialCondition& ic, const Params& p, double t_max, double eps_tail) {
  if (const auto* c = std::get_if<CustomInitial>(&ic)) return c->field.grid.half_width();
  const auto prof = *density_profiles(ic);
  auto mass = [&](double R) { return tail_mass(prof.rho11, R) + tail_mass(prof.rho22, R); };
  double hi = 1.0;
  while (mass(hi) > eps_tail) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 100 && hi - lo > 1e-9 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (mass(mid) > eps_tail ? lo : hi) = mid;
  }
  const double tm = std::max(t_max, 0.0);
  return hi + 2.0 * p.delta * tm + 6.0 * std::sqrt(4.0 * p.gamma_p * tm);
}

}  // namespace oqbm
