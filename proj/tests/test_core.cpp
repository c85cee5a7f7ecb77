#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "oqbm/error.hpp"
#include "oqbm/fields.hpp"
#include "oqbm/fourier.hpp"
#include "oqbm/initial.hpp"
#include "oqbm/parallel.hpp"
#include "oqbm/params.hpp"
#include "oqbm/quadrature.hpp"

using namespace oqbm;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ConfigError;
}

const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

}  // namespace

TEST_CASE("validate_params") {
  CHECK_NOTHROW(validate_params({1e-3, 1e-3, 1e-2, 0.0}));
  CHECK(code_of([] { validate_params({0.0, 1e-3, 1e-2, 0.0}); }) == ErrorCode::NonPositiveDiffusion);
  CHECK(code_of([] { validate_params({-1.0, 0, 0, 0}); }) == ErrorCode::NonPositiveDiffusion);
  CHECK(code_of([] { validate_params({1.0, -1e-3, 0, 0}); }) == ErrorCode::NegativeRate);
  CHECK(code_of([] { validate_params({std::nan(""), 0, 0, 0}); }) == ErrorCode::NonFinite);
  CHECK(code_of([] { validate_params({1.0, 0, std::numeric_limits<double>::infinity(), 0}); }) == ErrorCode::NonFinite);
}

TEST_CASE("grid") {
  const SpatialGrid g(4.0, 8);
  CHECK(g.spacing() == 1.0);
  CHECK(g.node(0) == -4.0);
  CHECK(g.node(4) == 0.0);
  CHECK(g.frequency(1) == doctest::Approx(std::numbers::pi / 4.0));
  CHECK(g.frequency(7) == doctest::Approx(-std::numbers::pi / 4.0));
  CHECK(g.nyquist_index() == 4);
  const auto x = g.nodes();
  for (std::size_t j = 1; j < x.size(); ++j) CHECK(x[j] > x[j - 1]);
  CHECK(code_of([] { SpatialGrid(1.0, 12); }) == ErrorCode::InvalidGrid);
  CHECK(code_of([] { SpatialGrid(-1.0, 16); }) == ErrorCode::InvalidGrid);
  CHECK(next_pow2(1000) == 1024);
  CHECK(next_pow2(1024) == 1024);
}

TEST_CASE("bloch round trip") {
  const SpatialGrid g(5.0, 64);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n;
  DensityField d{g, 1.5, {}, {}, {}};
  for (std::size_t j = 0; j < g.size(); ++j) {
    d.rho11.push_back(n(rng));
    d.rho22.push_back(n(rng));
    d.rho12.emplace_back(n(rng), n(rng));
  }
  const auto b = to_bloch(d);
  CHECK(b.time == 1.5);
  const auto r = from_bloch(b);
  double e = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    e = std::max({e, std::abs(r.rho11[j] - d.rho11[j]), std::abs(r.rho22[j] - d.rho22[j]), std::abs(r.rho12[j] - d.rho12[j])});
    CHECK(b.rho_plus[j] == doctest::Approx(d.rho11[j] + d.rho22[j]));
    CHECK(b.c_i[j] == d.rho12[j].imag());
  }
  CHECK(e < 1e-14);
  CHECK(test::linf(to_bloch(from_bloch(b)), b) < 1e-14);

  BlochField bad = b;
  bad.c_r.pop_back();
  CHECK(code_of([&] { from_bloch(bad); }) == ErrorCode::GridMismatch);
}

TEST_CASE("initial condition samples") {
  const SpatialGrid g(32.0, 1024);
  auto at = [&](const InitialCondition& ic, double x) {
    const auto d = density_profiles(ic);
    return std::pair{evaluate(d->rho11, x), evaluate(d->rho22, x)};
  };
  auto [a, b] = at(GaussianMixture{0.75, 1.0, 2.0}, 0.0);
  CHECK(a == doctest::Approx(0.75 / kSqrt2Pi).epsilon(1e-15));
  CHECK(b == doctest::Approx(0.25 / (2.0 * kSqrt2Pi)).epsilon(1e-15));

  std::tie(a, b) = at(UniformMixture{0.75, 3.0, 2.0}, 2.5);
  CHECK(a == doctest::Approx(0.75 / 6.0));
  CHECK(b == 0.0);
  // midpoint value at the jump
  std::tie(a, b) = at(UniformMixture{0.75, 3.0, 2.0}, 2.0);
  CHECK(b == doctest::Approx(0.5 * 0.25 / 4.0));

  const Params p{1e-2, 0.0, 1e-1, 1e-2};
  const auto lc = LaplaceCoherent::for_params(0.25, 0.0, -0.5, p);
  CHECK(lc.scale == doctest::Approx(10.0));
  const auto d = density_profiles(lc);
  CHECK(evaluate(d->im12, 0.0) == doctest::Approx(-0.5 * std::sqrt(3.0 / 16.0) * 0.05));
  CHECK(d->re12.empty());

  const auto bp = bloch_profiles(lc);
  CHECK(evaluate(bp->c_i, 0.3) == doctest::Approx(-0.5 * std::sqrt(0.25 * 0.75) * 0.05 * std::exp(-0.03)));
  CHECK(evaluate(bp->rho_minus, 0.0) == doctest::Approx(-0.5 * 0.05));

  const auto g3 = to_bloch(sample_initial(GaussianMixture{0.75, 1.0, 2.0}, g));
  CHECK(g3.rho_minus[512] == doctest::Approx(0.75 / kSqrt2Pi - 0.25 / (2.0 * kSqrt2Pi)));
}

TEST_CASE("initial condition validation") {
  CHECK(code_of([] { validate_initial(GaussianMixture{1.0, 1, 1}); }) == ErrorCode::InvalidInitialCondition);
  CHECK(code_of([] { validate_initial(GaussianMixture{0.5, 0, 1}); }) == ErrorCode::InvalidInitialCondition);
  CHECK(code_of([] { validate_initial(GaussianCoherent{0.5, 1.0, 1, 1}); }) == ErrorCode::InvalidInitialCondition);
  CHECK(code_of([] { validate_initial(LaplaceCoherent{0.5, 0.8, 0.8, 1}); }) == ErrorCode::InvalidInitialCondition);
  CHECK_NOTHROW(validate_initial(LaplaceCoherent{0.5, 0.6, 0.8, 1}));
  CHECK(code_of([] { LaplaceCoherent::for_params(0.5, 0, 0, {1, 0, 0, 1}); }) == ErrorCode::DegenerateParams);

  const SpatialGrid g(8.0, 64);
  DensityField d{g, 0.0, std::vector<double>(64, 0.0), std::vector<double>(64, 0.0), std::vector<std::complex<double>>(64)};
  CHECK(code_of([&] { validate_initial(CustomInitial{d}); }) == ErrorCode::InvalidInitialCondition);
}

TEST_CASE("tail rule and trace") {
  const Params p{1e-3, 1e-3, 1e-2, 0.0};
  // Laplace kinks cost dx^2 |jump f'| / 12 in the trapezoid sum and box jumps must sit on nodes,
  // so the smooth shapes get a modest grid and the others a fine or aligned one.
  struct Case {
    InitialCondition ic;
    std::size_t n;
    double min_half_width;
  };
  const std::vector<Case> cases{{GaussianMixture{0.75, 1, 2}, 4096, 0.0},
                                {GaussianCoherent{0.75, 0.8, 1, 1}, 4096, 0.0},
                                {LaplaceMixture{0.25, 1, 2}, 1u << 18, 0.0},
                                {UniformMixture{0.75, 3, 2}, 1u << 12, 16.0},
                                {LaplaceCoherent{0.25, 0.3, -0.5, 2.0}, 1u << 18, 0.0}};
  for (const auto& c : cases) {
    const double L = std::max(c.min_half_width, suggest_half_width(c.ic, p, 200.0));
    const SpatialGrid g(L, c.n);
    const auto f = to_bloch(sample_initial(c.ic, g));
    CHECK(std::abs(total_probability(f) - 1.0) < 1e-8);
    CHECK(test::min_of(from_bloch(f).rho11) >= -1e-12);
  }
  CHECK(code_of([] { sample_initial(GaussianMixture{0.5, 1, 2}, SpatialGrid(6.0, 256)); }) == ErrorCode::DomainTooNarrow);
  CHECK(suggest_half_width(GaussianMixture{0.5, 1, 2}, p, 0.0) < suggest_half_width(GaussianMixture{0.5, 1, 2}, p, 200.0));
}

TEST_CASE("exact transforms of the shapes") {
  const SpatialGrid g(40.0, 1u << 14);
  const std::vector<Shape> shapes{GaussianShape{1.3}, LaplaceShape{0.7}, GaussianWaveShape{1.0, 2.0, false},
                                  GaussianWaveShape{1.0, 2.0, true}};
  for (const auto& s : shapes) {
    std::vector<double> v(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) v[j] = evaluate(s, g.node(j));
    const auto F = fft::analyze(g, v);
    for (std::size_t k : {0u, 1u, 5u, 40u, 300u}) {
      // the Laplace kink limits the discrete transform to O(dx^2)
      CHECK(std::abs(F[k] - fourier(s, g.frequency(k))) < 1e-5);
    }
  }
  CHECK(fourier(BoxShape{2.0}, 0.0).real() == doctest::Approx(1.0));
  CHECK(std::abs(fourier(BoxShape{2.0}, 1.0) - std::sin(2.0) / 2.0) < 1e-15);
}

TEST_CASE("fft round trip") {
  const SpatialGrid g(10.0, 256);
  std::vector<double> v(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) v[j] = std::exp(-g.node(j) * g.node(j)) * (1.0 + 0.1 * g.node(j));
  const auto back = fft::real_part(fft::synthesize(g, fft::analyze(g, v)));
  CHECK(test::linf(back, v) < 1e-14);
}

TEST_CASE("parallel_for") {
  set_thread_count(3);
  std::vector<int> hit(10000, 0);
  parallel_for(hit.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) ++hit[i];
  }, 100);
  CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(1000, [](std::size_t b, std::size_t) {
    if (b > 0) throw std::runtime_error("x");
  }, 10), std::runtime_error);
  set_thread_count(0);
}

TEST_CASE("gauss legendre") {
  const auto& r = gauss_legendre(10);
  double s = 0.0;
  for (std::size_t i = 0; i < 10; ++i) s += r.weights[i] * std::pow(r.nodes[i], 18);
  CHECK(s == doctest::Approx(2.0 / 19.0).epsilon(1e-14));
  const ThetaQuadrature tq(32);
  double m = 0.0;
  for (std::size_t i = 0; i < tq.order(); ++i) m += tq.weights()[i] * std::sin(tq.nodes()[i]);
  CHECK(m == doctest::Approx(2.0).epsilon(1e-14));
  const double kink[1] = {0.3};
  CHECK(integrate([](double x) { return std::abs(x - 0.3); }, -1.0, 1.0, kink) == doctest::Approx(0.5 * (1.3 * 1.3 + 0.7 * 0.7)));
}

TEST_CASE("error names") {
  CHECK(to_string(ErrorCode::TailNotDecayed) == "TailNotDecayed");
  const Error e(ErrorCode::ConfigError, "bad");
  CHECK(std::string(e.what()).find("bad") != std::string::npos);
}
