#include "oqbm/closed_gammaz0.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "oqbm/error.hpp"
#include "oqbm/parallel.hpp"
#include "oqbm/quadrature.hpp"
#include "oqbm/specfun.hpp"

namespace oqbm::gammaz0 {

namespace {

void require_regime(const Params& p) {
  if (p.gamma_z != 0.0) fail(ErrorCode::WrongRegime, "closed forms for gamma_z = 0 called with gamma_z != 0");
  if (!(p.delta > 0.0) || !(p.omega > 0.0)) {
    fail(ErrorCode::DegenerateParams, "gamma_z = 0 closed forms need delta > 0 and omega > 0");
  }
}

void require_scale(const Params& p, const LaplaceCoherent& ic) {
  const double s = p.delta / p.omega;
  if (std::abs(ic.scale - s) > 1e-12 * s) fail(ErrorCode::ScaleMismatch, "Laplace scale must equal delta/omega");
}

// Light-cone integrals after y = 2 delta t cos(theta):
//   (f * kappa0)(x)        = (t/2) int_0^pi f(x - a cos) J0(2 t W sin) sin dtheta
//   smooth part of kappa1  = -t W  int_0^pi f(x - a cos) J1(2 t W sin) dtheta
class LightCone {
 public:
  LightCone(const Params& p, double t, const QuadratureOptions& opt) : a_(2.0 * p.delta * t), opt_(opt) {
    if (opt.start_order == 0 || opt.max_order < opt.start_order) {
      fail(ErrorCode::InvalidGrid, "bad quadrature orders");
    }
    const double z = 2.0 * t * p.omega;
    for (std::size_t n = opt.start_order; n <= opt.max_order; n *= 2) {
      ThetaQuadrature q(n);
      Table tb;
      tb.shift.resize(n);
      tb.w0.resize(n);
      tb.w1.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double th = q.nodes()[i], w = q.weights()[i];
        const double s = std::sin(th);
        tb.shift[i] = a_ * std::cos(th);
        tb.w0[i] = 0.5 * t * w * s * specfun::bessel_j0(z * s);
        tb.w1[i] = -t * p.omega * w * specfun::bessel_j1(z * s);
      }
      tables_.push_back(std::move(tb));
    }
  }

  double half_width() const { return a_; }

  // f(y, out) fills M values. k0 receives f*kappa0, k1 the smooth kappa1 part.
  template <std::size_t M, class F>
  void integrate(double x, F&& f, std::array<double, M>& k0, std::array<double, M>& k1) const {
    std::array<double, M> p0{}, p1{};
    bool have_prev = false;
    for (const auto& tb : tables_) {
      std::array<double, M> c0{}, c1{}, v{};
      for (std::size_t i = 0; i < tb.shift.size(); ++i) {
        f(x - tb.shift[i], v.data());
        for (std::size_t m = 0; m < M; ++m) {
          c0[m] += tb.w0[i] * v[m];
          c1[m] += tb.w1[i] * v[m];
        }
      }
      if (have_prev) {
        double diff = 0.0;
        for (std::size_t m = 0; m < M; ++m) diff = std::max({diff, std::abs(c0[m] - p0[m]), std::abs(c1[m] - p1[m])});
        if (diff < opt_.tol) {
          k0 = c0;
          k1 = c1;
          return;
        }
      }
      p0 = c0;
      p1 = c1;
      have_prev = true;
    }
    fail(ErrorCode::QuadratureNotConverged, "theta quadrature did not converge within the order cap");
  }

 private:
  struct Table {
    std::vector<double> shift, w0, w1;
  };
  double a_;
  QuadratureOptions opt_;
  std::vector<Table> tables_;
};

struct LaplaceState {
  double s;    // sqrt(p(1-p))
  double q, r, pm;  // pm = 2p - 1
};

LaplaceState state_of(const LaplaceCoherent& ic) {
  return {std::sqrt(ic.p * (1.0 - ic.p)), ic.q, ic.r, 2.0 * ic.p - 1.0};
}

// u1, u2, u3 at one point from the resolvent form built on phi+-, h+-.
std::array<double, 3> coherent_point(const Params& p, const LaplaceState& st, double t, double x,
                                     const LightCone& lc) {
  using specfun::laplace_kernels;
  const double a = lc.half_width();
  // k1 components: h+, phi+, phi-; k0 components: h+, h-
  std::array<double, 4> k0{}, k1{};
  lc.integrate<4>(
      x,
      [&](double y, double* out) {
        const auto k = laplace_kernels(t, y, p);
        out[0] = k.h_plus;
        out[1] = k.phi_plus;
        out[2] = k.phi_minus;
        out[3] = k.h_minus;
      },
      k0, k1);
  const auto c = laplace_kernels(t, x, p);
  const auto l = laplace_kernels(t, x - a, p);
  const auto r = laplace_kernels(t, x + a, p);
  const double hp_k1 = 0.5 * (l.h_plus + r.h_plus) + k1[0];
  const double pp_k1 = 0.5 * (l.phi_plus + r.phi_plus) + k1[1];
  const double pm_k1 = 0.5 * (l.phi_minus + r.phi_minus) + k1[2];
  const double hp_k0 = k0[0];
  const double hm_k0 = k0[3];
  const double W = p.omega;
  const double qs = st.q * st.s;
  const double u1 = c.phi_plus + (hp_k1 - pp_k1) - 2.0 * qs * (c.phi_minus - pm_k1) + 2.0 * W * st.pm * hm_k0;
  const double u2 = 0.5 * (c.phi_minus - pm_k1) + qs * (c.h_plus - c.phi_plus + pp_k1) + W * st.pm * hp_k0;
  const double u3 = 2.0 * W * hm_k0 - 4.0 * W * qs * hp_k0 + st.pm * hp_k1;
  return {u1, u2, u3};
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

double IdentityReport::max_printed() const { return std::max({g_fl, g_sgn_fl, xg_fl, fl_fl}); }

spectral::GreenMatrix green_gammaz0(const Params& p0, double t, const SpatialGrid& grid, const QuadratureOptions& opt) {
  const Params p = validate_params(p0);
  require_regime(p);
  if (!(t > 0.0)) fail(ErrorCode::NonPositiveTime, "t must be > 0");
  const LightCone lc(p, t, opt);
  const double a = lc.half_width();
  const double gp = p.gamma_p, W = p.omega, D = p.delta;
  const auto n = grid.size();
  spectral::GreenMatrix G{grid, t, {}, {}, 0.0};
  for (auto& row : G.entries)
    for (auto& e : row) e.assign(n, 0.0);
  // g, h+, h-, y g
  auto kernels = [&](double y, double* out) {
    const auto k = specfun::laplace_kernels(t, y, p);
    const double g = specfun::heat_kernel(t, y, gp);
    out[0] = g;
    out[1] = k.h_plus;
    out[2] = k.h_minus;
    out[3] = y * g;
  };
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t j = b; j < e; ++j) {
      const double x = grid.node(j);
      std::array<double, 4> k0{}, k1{}, c{}, l{}, r{};
      lc.integrate<4>(x, kernels, k0, k1);
      kernels(x, c.data());
      kernels(x - a, l.data());
      kernels(x + a, r.data());
      std::array<double, 4> conv1{};
      for (int m = 0; m < 4; ++m) conv1[m] = 0.5 * (l[m] + r[m]) + k1[m];
      const double g = c[0], hp = c[1], hm = c[2];
      G.entries[0][0][j] = hp + conv1[0] - conv1[1];
      G.entries[0][1][j] = -2.0 * hm + 2.0 * conv1[2];
      G.entries[0][2][j] = D / (2.0 * gp * t) * k0[3];
      G.entries[1][0][j] = 0.5 * hm - 0.5 * conv1[2];
      G.entries[1][1][j] = g - hp + conv1[1];
      G.entries[1][2][j] = W * k0[0];
      G.entries[2][0][j] = G.entries[0][2][j];
      G.entries[2][1][j] = -4.0 * W * k0[0];
      G.entries[2][2][j] = conv1[0];
    }
  });
  return G;
}

IdentityReport convolution_identities_check(const Params& p0, double t, const SpatialGrid& grid) {
  const Params p = validate_params(p0);
  require_regime(p);
  if (!(t > 0.0)) fail(ErrorCode::NonPositiveTime, "t must be > 0");
  const double gp = p.gamma_p, D = p.delta, W = p.omega;
  const double A = W / D;
  const double width = 12.0 * std::sqrt(4.0 * gp * t);
  const double reach = 45.0 / A;
  auto fl = [&](double y) { return 0.5 * A * std::exp(-A * std::abs(y)); };
  auto g = [&](double y) { return std::exp(-y * y / (8.0 * gp * t)) / (2.0 * std::sqrt(2.0 * std::numbers::pi * gp * t)); };
  const auto n = grid.size();
  std::vector<double> l1(n), r1(n), l2(n), r2(n), l3(n), r3(n), l4(n), r4(n);
  const double zero = 0.0;
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t j = b; j < e; ++j) {
      const double x = grid.node(j);
      const std::array<double, 1> cut0{zero};
      l1[j] = integrate([&](double y) { return g(x - y) * fl(y); }, x - width, x + width, cut0, 32, 20);
      l2[j] = integrate([&](double y) { return g(x - y) * (y > 0 ? 1.0 : (y < 0 ? -1.0 : 0.0)) * fl(y); },
                        x - width, x + width, cut0, 32, 20);
      l3[j] = integrate([&](double y) { return (x - y) * g(x - y) * fl(y); }, x - width, x + width, cut0, 32, 20);
      const std::array<double, 2> cuts{zero, x};
      l4[j] = integrate([&](double y) { return fl(x - y) * fl(y); }, std::min(0.0, x) - reach,
                        std::max(0.0, x) + reach, cuts, 48, 24);
      const auto k = specfun::laplace_kernels(t, x, p);
      r1[j] = k.h_plus;
      r2[j] = k.h_minus;
      r3[j] = 4.0 * gp * t * W / D * k.h_minus;
      r4[j] = (W * std::abs(x) + D) * fl(x) / (2.0 * D);
    }
  });
  IdentityReport rep;
  rep.points = n;
  rep.g_fl = sup_diff(l1, r1);
  rep.g_sgn_fl = sup_diff(l2, r2);
  rep.xg_fl = sup_diff(l3, r3);
  rep.fl_fl = sup_diff(l4, r4);

  const LightCone lc(p, t, QuadratureOptions{64, 4096, 1e-13});
  const double a = lc.half_width();
  for (std::size_t j = 0; j < n; ++j) {
    const double x = grid.node(j);
    if (!(x > a)) continue;
    std::array<double, 1> k0{}, k1{};
    lc.integrate<1>(x, [&](double y, double* out) { out[0] = fl(y); }, k0, k1);
    const double c1 = 0.5 * (fl(x - a) + fl(x + a)) + k1[0];
    rep.fl_kappa1 = std::max(rep.fl_kappa1, std::abs(c1 - fl(x)));
    rep.fl_kappa0 = std::max(rep.fl_kappa0, std::abs(k0[0] - t * fl(x)));
  }
  return rep;
}

BlochField solve_laplace_coherent(const Params& p0, const LaplaceCoherent& ic, double t, const SpatialGrid& grid,
                                  const QuadratureOptions& opt) {
  const Params p = validate_params(p0);
  require_regime(p);
  validate_initial(ic);
  require_scale(p, ic);
  if (t < 0.0) fail(ErrorCode::NonPositiveTime, "t must be >= 0");
  if (t == 0.0) return to_bloch(sample_initial(ic, grid));
  const LightCone lc(p, t, opt);
  const auto st = state_of(ic);
  BlochField f = zero_bloch(grid, t);
  parallel_for(grid.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t j = b; j < e; ++j) {
      const double x = grid.node(j);
      const auto u = coherent_point(p, st, t, x, lc);
      f.rho_plus[j] = u[0];
      f.c_i[j] = u[1];
      f.rho_minus[j] = u[2];
      f.c_r[j] = st.r * st.s * specfun::h_plus(t, x, p);
    }
  }, 64);
  return f;
}

double density_pdfF(const Params& p0, const LaplaceCoherent& ic, double t, double x, const QuadratureOptions& opt) {
  const Params p = validate_params(p0);
  require_regime(p);
  validate_initial(ic);
  require_scale(p, ic);
  if (!(t > 0.0)) fail(ErrorCode::NonPositiveTime, "t must be > 0");
  const LightCone lc(p, t, opt);
  const double a = lc.half_width();
  const double W = p.omega;
  const double s = std::sqrt(ic.p * (1.0 - ic.p));
  // smooth kappa1 parts of (h+ - phi+) and phi-, kappa0 part of h-
  std::array<double, 3> k0{}, k1{};
  lc.integrate<3>(
      x,
      [&](double y, double* out) {
        const auto k = specfun::laplace_kernels(t, y, p);
        out[0] = k.h_plus - k.phi_plus;
        out[1] = k.phi_minus;
        out[2] = k.h_minus;
      },
      k0, k1);
  const auto c = specfun::laplace_kernels(t, x, p);
  const auto l = specfun::laplace_kernels(t, x - a, p);
  const auto r = specfun::laplace_kernels(t, x + a, p);
  // k1 already carries the factor -tW; k0 carries t/2
  const double int_hp = -k1[0] / (t * W);
  const double int_pm = -k1[1] / (t * W);
  const double int_hm = 2.0 * k0[2] / t;
  return c.phi_plus + 0.5 * (l.h_plus - l.phi_plus + r.h_plus - r.phi_plus) - t * W * int_hp -
         2.0 * ic.q * s * (c.phi_minus - 0.5 * (l.phi_minus + r.phi_minus) + t * W * int_pm) +
         (2.0 * ic.p - 1.0) * t * W * int_hm;
}

double imbalance_popimbz(const Params& p0, const LaplaceCoherent& ic, double t, double x,
                         const QuadratureOptions& opt) {
  const Params p = validate_params(p0);
  require_regime(p);
  validate_initial(ic);
  require_scale(p, ic);
  if (!(t > 0.0)) fail(ErrorCode::NonPositiveTime, "t must be > 0");
  const LightCone lc(p, t, opt);
  const double a = lc.half_width();
  const double W = p.omega;
  const double s = std::sqrt(ic.p * (1.0 - ic.p));
  const double pm = 2.0 * ic.p - 1.0;
  std::array<double, 2> k0{}, k1{};
  lc.integrate<2>(
      x,
      [&](double y, double* out) {
        const auto k = specfun::laplace_kernels(t, y, p);
        out[0] = k.h_minus;
        out[1] = k.h_plus;
      },
      k0, k1);
  const double int_hm_j0 = 2.0 * k0[0] / t;
  const double int_hp_j0 = 2.0 * k0[1] / t;
  const double int_hp_j1 = -k1[1] / (t * W);
  const double hl = specfun::h_plus(t, x - a, p), hr = specfun::h_plus(t, x + a, p);
  return 0.5 * pm * (hl + hr) + t * W * int_hm_j0 - 2.0 * t * ic.q * W * s * int_hp_j0 - pm * t * W * int_hp_j1;
}

FarField far_field(const Params& p0, const LaplaceCoherent& ic, double t, double x) {
  const Params p = validate_params(p0);
  require_regime(p);
  validate_initial(ic);
  require_scale(p, ic);
  if (!(t > 0.0)) fail(ErrorCode::NonPositiveTime, "t must be > 0");
  if (!(x > 2.0 * p.delta * t)) fail(ErrorCode::InvalidGrid, "far-field form needs x > 2 delta t");
  const auto k = specfun::laplace_kernels(t, x, p);
  const double W = p.omega;
  const double qs = ic.q * std::sqrt(ic.p * (1.0 - ic.p));
  const double pm = 2.0 * ic.p - 1.0;
  return {k.h_plus + 2.0 * t * W * pm * k.h_minus, (qs + t * W * pm) * k.h_plus,
          2.0 * t * W * k.h_minus + (pm - 4.0 * W * qs * t) * k.h_plus};
}

}  // namespace oqbm::gammaz0
