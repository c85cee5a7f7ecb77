#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "oqbm/closed_omega0.hpp"
#include "oqbm/error.hpp"
#include "oqbm/spectral.hpp"

using namespace oqbm;
using namespace oqbm::spectral;

namespace {

std::array<cplx, 3> sorted(std::array<cplx, 3> v) {
  std::sort(v.begin(), v.end(), [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
  return v;
}

double set_distance(const std::array<cplx, 3>& a, const std::array<cplx, 3>& b) {
  // greedy match, enough for three well separated roots
  std::array<bool, 3> used{};
  double worst = 0.0;
  for (const auto& x : a) {
    double best = 1e300;
    int bi = 0;
    for (int j = 0; j < 3; ++j) {
      if (!used[j] && std::abs(x - b[j]) < best) {
        best = std::abs(x - b[j]);
        bi = j;
      }
    }
    used[bi] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

Params random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> lg(-3.0, 0.5);
  return {std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng)), std::pow(10.0, lg(rng))};
}

const cplx I(0.0, 1.0);

}  // namespace

TEST_CASE("symbol") {
  const Params p{1e-3, 2e-3, 1e-2, 3e-2};
  const auto q0 = build_symbol(0.0, p).q;
  CHECK(q0(1, 1) == cplx(-2 * p.gamma_z));
  CHECK(q0(1, 2) == cplx(p.omega));
  CHECK(q0(2, 1) == cplx(-4 * p.omega));
  CHECK(q0(0, 0) == cplx(0.0));
  const auto q1 = build_symbol(1.0, Params{1, 0, 1, 0}).q;
  Matrix3c e;
  e << -2.0, 0.0, -2.0 * I, 0.0, -2.0, 0.0, -2.0 * I, 0.0, -2.0;
  CHECK((q1 - e).norm() == 0.0);
  const auto qo = build_symbol(0.0, Params{1, 0.5, 1, 0}).q;
  CHECK((qo - Matrix3c(Eigen::Vector3cd(0.0, -1.0, 0.0).asDiagonal())).norm() == 0.0);
}

TEST_CASE("characteristic polynomial") {
  const Params p{1e-3, 2e-3, 1e-2, 3e-2};
  const auto c0 = char_coeffs(0.0, p);
  CHECK(c0.a1 == doctest::Approx(2 * p.gamma_z));
  CHECK(c0.a2 == doctest::Approx(4 * p.omega * p.omega));
  CHECK(c0.a3 == 0.0);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n;
  for (int i = 0; i < 50; ++i) {
    const Params q = random_params(rng);
    const double xi = 3.0 * n(rng);
    const auto c = char_coeffs(xi, q);
    const double g = q.gamma_p, z = q.gamma_z, d = q.delta, w = q.omega, x2 = xi * xi;
    const double rh = 64 * g * g * g * x2 * x2 * x2 + (16 * d * d * g + 64 * g * g * z) * x2 * x2 +
                      (16 * w * w * g + 16 * g * z * z) * x2 + 8 * w * w * z;
    CHECK(c.a1 * c.a2 - c.a3 == doctest::Approx(rh).epsilon(1e-12));
    const cplx lam(n(rng), n(rng));
    const Matrix3c m = lam * Matrix3c::Identity() - build_symbol(xi, q).q;
    const cplx chi = lam * lam * lam + c.a1 * lam * lam + c.a2 * lam + c.a3;
    CHECK(std::abs(m.determinant() - chi) < 1e-10 * std::max(1.0, std::abs(chi)));
  }
}

TEST_CASE("eigenvalues in the special regimes") {
  const double xi = 0.7;
  {
    const Params p{0.1, 0.2, 0.3, 0.0};
    const std::array<cplx, 3> e{-2 * p.gamma_p * xi * xi - 2 * p.gamma_z, -2 * p.gamma_p * xi * xi + 2.0 * I * p.delta * xi,
                                -2 * p.gamma_p * xi * xi - 2.0 * I * p.delta * xi};
    CHECK(set_distance(eigensystem(build_symbol(xi, p), p).lambdas, e) < 1e-12);
  }
  {
    const Params p{0.1, 0.5, 0.0, 0.1};
    const double s = std::sqrt(p.gamma_z * p.gamma_z - 4 * p.omega * p.omega);
    const double b = -2 * p.gamma_p * xi * xi;
    const std::array<cplx, 3> e{b, b - p.gamma_z + s, b - p.gamma_z - s};
    CHECK(set_distance(eigensystem(build_symbol(xi, p), p).lambdas, e) < 1e-12);
  }
  {
    const Params p{0.1, 0.0, 0.3, 0.2};
    const double w = 2 * std::sqrt(p.delta * p.delta * xi * xi + p.omega * p.omega);
    const double b = -2 * p.gamma_p * xi * xi;
    const std::array<cplx, 3> e{b, b + I * w, b - I * w};
    CHECK(set_distance(eigensystem(build_symbol(xi, p), p).lambdas, e) < 1e-12);
  }
}

TEST_CASE("cardano roots against the numeric solver") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ux(-2.0, 1.5);
  int compared = 0;
  for (int i = 0; i < 500; ++i) {
    const Params p = random_params(rng);
    const double xi = std::pow(10.0, ux(rng));
    bool ok = false;
    const auto a = cardano_eigenvalues(xi, p, &ok);
    const auto sm = build_symbol(xi, p);
    const auto c = char_coeffs(xi, p);
    const double scale = sm.q.norm();
    for (const auto& l : a) CHECK(std::abs(l * l * l + c.a1 * l * l + c.a2 * l + c.a3) <= 1e-10 * scale * scale * scale);
    if (!ok) continue;
    ++compared;
    const auto b = numeric_eigenvalues(sm.q);
    CHECK(set_distance(a, b) <= 1e-9 * scale);
  }
  CHECK(compared > 400);
}

TEST_CASE("eigenvectors") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Params p = random_params(rng);
    const double xi = std::uniform_real_distribution<double>(0.01, 10.0)(rng);
    const auto sm = build_symbol(xi, p);
    try {
      const auto es = eigensystem(sm, p);
      Matrix3c lam = Matrix3c::Zero();
      for (int k = 0; k < 3; ++k) lam(k, k) = es.lambdas[k];
      CHECK((es.vectors * lam * es.inverse - sm.q).norm() < 1e-9 * std::max(1.0, sm.q.norm()));
      CHECK((es.vectors * es.inverse - Matrix3c::Identity()).norm() < 1e-8);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DefectiveMatrix);
    }
  }
}

TEST_CASE("stability") {
  const Params p{1e-3, 1e-3, 1e-2, 1e-2};
  const double zero[1] = {0.0};
  const auto r0 = stability_check(p, zero);
  CHECK(r0.zero_eigenvalue < 1e-12);
  const auto l0 = sorted(eigensystem(build_symbol(0.0, p), p).lambdas);
  const cplx s = std::sqrt(cplx(p.gamma_z * p.gamma_z - 4 * p.omega * p.omega));
  CHECK(set_distance(l0, {0.0, -p.gamma_z + s, -p.gamma_z - s}) < 1e-14);
  std::vector<double> xs;
  for (int k = 1; k <= 200; ++k) xs.push_back(0.01 * k * k);
  CHECK(stability_check(p, xs).max_real_part < 0.0);
  for (double xi : {1e2, 1e3}) {
    for (const auto& l : cardano_eigenvalues(xi, p)) CHECK(l.real() <= -2 * p.gamma_p * xi * xi * (1.0 - 1e-9));
  }
}

TEST_CASE("matrix exponential") {
  const Params p0{1e-3, 1e-3, 1e-2, 0.0};
  const double xi = 2.3, t = 40.0;
  CHECK((exp_symbol(build_symbol(xi, p0), 0.0, p0) - Matrix3c::Identity()).norm() < 1e-15);
  const double d = std::exp(-2 * p0.gamma_p * t * xi * xi);
  const double th = 2 * p0.delta * t * xi;
  Matrix3c e;
  e << d * std::cos(th), 0.0, -I * d * std::sin(th), 0.0, d * std::exp(-2 * p0.gamma_z * t), 0.0, -I * d * std::sin(th), 0.0,
      d * std::cos(th);
  CHECK((exp_symbol(build_symbol(xi, p0), t, p0) - e).norm() < 1e-13);

  const Params pz{1e-2, 0.0, 1e-1, 1e-2};
  const double w = 2 * std::sqrt(pz.delta * pz.delta * xi * xi + pz.omega * pz.omega);
  const auto ez = exp_symbol(build_symbol(xi, pz), 25.0, pz);
  CHECK(std::abs(ez(2, 2) - std::exp(-2 * 25.0 * xi * xi * pz.gamma_p) * std::cos(25.0 * w)) < 1e-13);

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ut(0.0, 100.0), ux(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const Params p = random_params(rng);
    const double x = ux(rng), tt = ut(rng);
    const auto sm = build_symbol(x, p);
    const auto a = exp_symbol(sm, tt, p);
    const Matrix3c b = expm_pade(tt * sm.q);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10);
    const double t1 = 0.3 * tt, t2 = 0.7 * tt;
    CHECK((exp_symbol(sm, t1, p) * exp_symbol(sm, t2, p) - a).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("defective symbol falls back to squaring") {
  const Params p{1e-3, 2e-2, 0.0, 1e-2};  // critical at xi = 0
  const auto sm = build_symbol(0.0, p);
  CHECK_THROWS_AS(eigensystem(sm, p), Error);
  const double t = 25.0;
  const auto e = exp_symbol(sm, t, p);
  const double k = std::exp(-p.gamma_z * t);
  CHECK(std::abs(e(1, 1) - k * (1.0 - p.gamma_z * t)) < 1e-14);
  CHECK(std::abs(e(1, 2) - k * p.omega * t) < 1e-14);
  CHECK(std::abs(e(2, 2) - k * (1.0 + p.gamma_z * t)) < 1e-14);
}

TEST_CASE("green function") {
  const Params p{1e-3, 1e-3, 1e-2, 0.0};
  const SpatialGrid g(8.0, 2048);
  const double t = 50.0;
  const auto G = green_function(p, t, g);
  CHECK(G.max_imag_residue < 1e-10);
  double e = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const auto m = omega0::green_omega0(p, t, g.node(j));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) e = std::max(e, std::abs(m(a, b) - G.entries[a][b][j]));
  }
  CHECK(e < 1e-8);

  const Params q{1e-3, 2e-3, 1e-2, 1e-2};
  const auto H = green_function(q, t, g);
  const auto e0 = exp_symbol(build_symbol(0.0, q), t, q);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(trapezoid(H.entries[a][b], g.spacing()) == doctest::Approx(e0(a, b).real()).epsilon(1e-10));

  try {
    green_function(p, t, SpatialGrid(8.0, 64));
    FAIL("expected GridUnderResolved");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::GridUnderResolved);
  }
  try {
    green_function(p, 500.0, SpatialGrid(8.0, 2048));
    FAIL("expected TailNotDecayed");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::TailNotDecayed);
  }
}

TEST_CASE("spectral solve") {
  const Params p{1e-3, 1e-3, 1e-2, 0.0};
  const GaussianMixture ic{0.75, 1.0, 2.0};
  const SpatialGrid g(24.0, 4096);
  const auto u0 = to_bloch(sample_initial(ic, g));
  CHECK(test::linf(solve(p, ic, 0.0, g), u0) < 1e-13);
  CHECK(test::linf(solve(p, ic, 50.0, g), omega0::solve_omega0(p, ic, 50.0, g)) < 1e-8);

  const Params q{1e-3, 1e-3, 1e-2, 1e-2};
  const GaussianCoherent gc{0.75, 0.8, 1.0, 1.0};
  const auto a = solve(q, gc, 30.0, g);
  CHECK(std::abs(total_probability(a) - 1.0) < 1e-8);
  const auto b = solve(q, CustomInitial{from_bloch(solve(q, gc, 10.0, g))}, 20.0, g);
  CHECK(test::linf(a, b) < 1e-8);
}
