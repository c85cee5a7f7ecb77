#include "oqbm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <type_traits>

#include "oqbm/error.hpp"
#include "oqbm/parallel.hpp"

namespace oqbm::oracle {

namespace {

struct State {
  std::size_t n;
  std::vector<double> v;  // rho_plus | c_i | rho_minus | c_r
  double* comp(int c) { return v.data() + static_cast<std::size_t>(c) * n; }
  const double* comp(int c) const { return v.data() + static_cast<std::size_t>(c) * n; }
};

struct Stepper {
  const Params& p;
  std::size_t n;
  double dx;
  bool with_cr;

  // k = f(src); acc += ca*k; dst = u + cd*k
  void stage(const State& src, const State& u, State& acc, State& dst, double ca, double cd) const {
    const double dif = 2.0 * p.gamma_p / (dx * dx);
    const double adv = 2.0 * p.delta / (2.0 * dx);
    const double gz2 = 2.0 * p.gamma_z;
    const double W = p.omega;
    const double* rp = src.comp(0);
    const double* ci = src.comp(1);
    const double* rm = src.comp(2);
    const double* cr = src.comp(3);
    double* a0 = acc.v.data();
    double* d0 = dst.v.data();
    const double* u0 = u.v.data();
    const std::size_t N = n;
    auto body = [&](std::size_t j, std::size_t jm, std::size_t jp) {
      const double krp = dif * (rp[jp] - 2.0 * rp[j] + rp[jm]) - adv * (rm[jp] - rm[jm]);
      const double kci = dif * (ci[jp] - 2.0 * ci[j] + ci[jm]) - gz2 * ci[j] + W * rm[j];
      const double krm = dif * (rm[jp] - 2.0 * rm[j] + rm[jm]) - adv * (rp[jp] - rp[jm]) - 4.0 * W * ci[j];
      a0[j] += ca * krp;
      a0[N + j] += ca * kci;
      a0[2 * N + j] += ca * krm;
      d0[j] = u0[j] + cd * krp;
      d0[N + j] = u0[N + j] + cd * kci;
      d0[2 * N + j] = u0[2 * N + j] + cd * krm;
      if (with_cr) {
        const double kcr = dif * (cr[jp] - 2.0 * cr[j] + cr[jm]) - gz2 * cr[j];
        a0[3 * N + j] += ca * kcr;
        d0[3 * N + j] = u0[3 * N + j] + cd * kcr;
      }
    };
    body(0, N - 1, 1);
    for (std::size_t j = 1; j + 1 < N; ++j) body(j, j - 1, j + 1);
    body(N - 1, N - 2, 0);
  }

  void step(State& u, State& acc, State& a, State& b, double dt) const {
    acc.v = u.v;
    stage(u, u, acc, a, dt / 6.0, dt / 2.0);
    stage(a, u, acc, b, dt / 3.0, dt / 2.0);
    stage(b, u, acc, a, dt / 3.0, dt);
    stage(a, u, acc, b, dt / 6.0, 0.0);
    std::swap(u.v, acc.v);
  }
};

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) {
    if (std::isnan(x)) return x;
    m = std::max(m, std::abs(x));
  }
  return m;
}

BlochField to_field(const State& s, const SpatialGrid& grid, double t) {
  BlochField f = zero_bloch(grid, t);
  const auto n = grid.size();
  std::copy(s.comp(0), s.comp(0) + n, f.rho_plus.begin());
  std::copy(s.comp(1), s.comp(1) + n, f.c_i.begin());
  std::copy(s.comp(2), s.comp(2) + n, f.rho_minus.begin());
  std::copy(s.comp(3), s.comp(3) + n, f.c_r.begin());
  return f;
}

struct Run {
  std::vector<BlochField> fields;
  std::vector<std::size_t> steps;
  double dt_max = 0.0;
};

Run run(const Params& p, const InitialCondition& ic, std::span<const double> times, const SpatialGrid& grid,
        double dt_max, double eps_tail) {
  const auto n = grid.size();
  const auto d = sample_initial(ic, grid, eps_tail);
  State u{n, std::vector<double>(4 * n)};
  for (std::size_t j = 0; j < n; ++j) {
    u.v[j] = d.rho11[j] + d.rho22[j];
    u.v[n + j] = d.rho12[j].imag();
    u.v[2 * n + j] = d.rho11[j] - d.rho22[j];
    u.v[3 * n + j] = d.rho12[j].real();
  }
  const bool with_cr = max_abs(std::vector<double>(u.v.begin() + 3 * n, u.v.end())) > 0.0;
  const double limit = 10.0 * std::max(max_abs(u.v), 1e-300);
  State acc = u, a = u, b = u;
  const Stepper st{p, n, grid.spacing(), with_cr};
  Run r;
  r.dt_max = dt_max;
  double t = 0.0;
  std::size_t total = 0;
  for (double target : times) {
    const double span = target - t;
    if (span < 0.0) fail(ErrorCode::NonPositiveTime, "snapshot times must be ascending");
    const auto steps = static_cast<std::size_t>(std::ceil(span / dt_max - 1e-12));
    const double dt = steps > 0 ? span / static_cast<double>(steps) : 0.0;
    for (std::size_t s = 0; s < steps; ++s) {
      st.step(u, acc, a, b, dt);
      if ((s & 255u) == 255u || s + 1 == steps) {
        const double m = max_abs(u.v);
        if (!(m <= limit)) fail(ErrorCode::UnstableStep, "finite-difference solution blew up");
      }
    }
    total += steps;
    t = target;
    for (int c = 0; c < 4; ++c) {
      const double* v = u.comp(c);
      if (std::abs(v[0]) > eps_tail || std::abs(v[n - 1]) > eps_tail) {
        fail(ErrorCode::DomainTooNarrow, "finite-difference solution reached the grid boundary");
      }
    }
    r.fields.push_back(to_field(u, grid, t));
    r.steps.push_back(total);
  }
  return r;
}

}  // namespace

double auto_dt(const Params& p, const SpatialGrid& grid) {
  const double dx = grid.spacing();
  double dt = dx * dx / (8.0 * p.gamma_p);
  if (p.delta > 0.0) dt = std::min(dt, dx / (4.0 * p.delta));
  if (p.gamma_z + p.omega > 0.0) dt = std::min(dt, 1.0 / (4.0 * (p.gamma_z + p.omega)));
  return dt;
}

std::vector<FdResult> fd_integrate(const Params& p0, const InitialCondition& ic, std::span<const double> times,
                                   const SpatialGrid& grid, const FdOptions& opt) {
  const Params p = validate_params(p0);
  if (times.empty()) return {};
  for (double t : times) {
    if (!(t > 0.0) || !std::isfinite(t)) fail(ErrorCode::NonPositiveTime, "t_end must be > 0");
  }
  if (!std::is_sorted(times.begin(), times.end())) fail(ErrorCode::NonPositiveTime, "times must be ascending");
  const double dt = opt.dt > 0.0 ? opt.dt : auto_dt(p, grid);
  auto coarse = run(p, ic, times, grid, dt, opt.eps_tail);
  std::vector<FdResult> out;
  if (opt.estimate_error) {
    auto fine = run(p, ic, times, grid, 0.5 * dt, opt.eps_tail);
    for (std::size_t i = 0; i < times.size(); ++i) {
      const auto& a = coarse.fields[i];
      const auto& b = fine.fields[i];
      double e = 0.0;
      for (std::size_t j = 0; j < grid.size(); ++j) {
        e = std::max({e, std::abs(a.rho_plus[j] - b.rho_plus[j]), std::abs(a.c_i[j] - b.c_i[j]),
                      std::abs(a.rho_minus[j] - b.rho_minus[j]), std::abs(a.c_r[j] - b.c_r[j])});
      }
      out.push_back({std::move(fine.fields[i]), e, 0.5 * dt, fine.steps[i]});
    }
    return out;
  }
  for (std::size_t i = 0; i < times.size(); ++i) out.push_back({std::move(coarse.fields[i]), 0.0, dt, coarse.steps[i]});
  return out;
}

FdResult fd_integrate(const Params& p, const InitialCondition& ic, double t_end, const SpatialGrid& grid,
                      const FdOptions& opt) {
  const double times[1] = {t_end};
  return std::move(fd_integrate(p, ic, std::span<const double>(times, 1), grid, opt).front());
}

std::vector<SpatialRichardson> fd_richardson(const Params& p, const InitialCondition& ic, std::span<const double> times,
                                             const SpatialGrid& fine, const FdOptions& opt) {
  if (fine.size() < 4) fail(ErrorCode::InvalidGrid, "Richardson needs at least 4 points");
  const SpatialGrid coarse(fine.half_width(), fine.size() / 2);
  FdOptions o = opt;
  o.estimate_error = false;
  // the same step on both grids so only the spatial error differs
  if (!(o.dt > 0.0)) o.dt = auto_dt(p, fine);
  auto f = fd_integrate(p, ic, times, fine, o);
  auto c = fd_integrate(p, ic, times, coarse, o);
  std::vector<SpatialRichardson> out;
  for (std::size_t i = 0; i < times.size(); ++i) {
    BlochField x = zero_bloch(coarse, times[i]);
    double e = 0.0;
    auto combine = [&](const std::vector<double>& uf, const std::vector<double>& uc, std::vector<double>& dst) {
      for (std::size_t j = 0; j < coarse.size(); ++j) {
        const double d = uf[2 * j] - uc[j];
        dst[j] = uf[2 * j] + d / 3.0;
        e = std::max(e, std::abs(d) / 3.0);
      }
    };
    combine(f[i].field.rho_plus, c[i].field.rho_plus, x.rho_plus);
    combine(f[i].field.c_i, c[i].field.c_i, x.c_i);
    combine(f[i].field.rho_minus, c[i].field.rho_minus, x.rho_minus);
    combine(f[i].field.c_r, c[i].field.c_r, x.c_r);
    out.push_back({std::move(f[i]), std::move(x), e});
  }
  return out;
}

namespace {

template <class T, class Sym, class Zero>
std::vector<T> trapezoid_inverse(const Sym& symbol, std::span<const double> x, double xi_max, std::size_t n_xi,
                                 double tol, std::size_t max_intervals, Zero zero, std::size_t* used) {
  if (!(xi_max > 0.0) || n_xi < 2) fail(ErrorCode::InvalidGrid, "bad frequency range");
  const std::size_t m = x.size();
  std::vector<T> sum(m, zero);  // plain sum of node values times e^{i xi x}
  auto add_nodes = [&](double first, double step, std::size_t count, double w) {
    constexpr std::size_t block = 2048;
    std::vector<T> vals(std::min(block, count), zero);
    std::vector<double> xis(vals.size());
    for (std::size_t start = 0; start < count; start += block) {
      const std::size_t nb = std::min(block, count - start);
      for (std::size_t k = 0; k < nb; ++k) {
        xis[k] = first + static_cast<double>(start + k) * step;
        vals[k] = symbol(xis[k]);
      }
      parallel_for(m, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
          T acc = zero;
          for (std::size_t k = 0; k < nb; ++k) {
            const double ph = xis[k] * x[i];
            acc += vals[k] * std::complex<double>(std::cos(ph), std::sin(ph));
          }
          sum[i] += w * acc;
        }
      }, 16);
    }
  };
  std::size_t n = n_xi;
  double h = 2.0 * xi_max / static_cast<double>(n);
  add_nodes(-xi_max, 2.0 * xi_max, 2, 0.5);
  add_nodes(-xi_max + h, h, n - 1, 1.0);
  auto result = [&](double step) {
    std::vector<T> r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = sum[i] * (step / (2.0 * std::numbers::pi));
    return r;
  };
  auto prev = result(h);
  while (true) {
    if (2 * n > max_intervals) fail(ErrorCode::QuadratureNotConverged, "inverse Fourier quadrature did not converge");
    add_nodes(-xi_max + 0.5 * h, h, n, 1.0);
    n *= 2;
    h *= 0.5;
    auto cur = result(h);
    double diff = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      double d;
      if constexpr (std::is_same_v<T, Eigen::Matrix3cd>) {
        d = (cur[i] - prev[i]).cwiseAbs().maxCoeff();
      } else {
        d = std::abs(cur[i] - prev[i]);
      }
      diff = std::max(diff, d);
    }
    if (diff < tol) {
      if (used) *used = n;
      return cur;
    }
    prev = std::move(cur);
  }
}

}  // namespace

QuadKernel quad_inverse_fourier(const MatrixSymbol& symbol, std::span<const double> x, double xi_max,
                                std::size_t n_xi, double tol, std::size_t max_intervals) {
  QuadKernel k;
  k.x.assign(x.begin(), x.end());
  k.values = trapezoid_inverse<Eigen::Matrix3cd>(symbol, x, xi_max, n_xi, tol, max_intervals,
                                                 Eigen::Matrix3cd::Zero().eval(), &k.n_xi);
  return k;
}

std::vector<std::complex<double>> quad_inverse_fourier_scalar(const std::function<std::complex<double>(double)>& symbol,
                                                               std::span<const double> x, double xi_max,
                                                               std::size_t n_xi, double tol, std::size_t max_intervals) {
  return trapezoid_inverse<std::complex<double>>(symbol, x, xi_max, n_xi, tol, max_intervals,
                                                 std::complex<double>(0.0), nullptr);
}

}  // namespace oqbm::oracle
