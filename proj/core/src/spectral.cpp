#include "oqbm/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "oqbm/closed_omega0.hpp"
#include "oqbm/error.hpp"
#include "oqbm/fourier.hpp"
#include "oqbm/parallel.hpp"

namespace oqbm::spectral {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kConditionLimit = 1e8;
constexpr double kGapLimit = 1e-8;

// Characteristic cubic of M = Q + 2 gamma_p xi^2 I:
// mu^3 + 2gz mu^2 + (4 D^2 xi^2 + 4 W^2) mu + 8 gz D^2 xi^2.
struct ShiftedCubic {
  double c2, c1, c0;
  cplx value(cplx m) const { return ((m + c2) * m + c1) * m + c0; }
  cplx slope(cplx m) const { return (3.0 * m + 2.0 * c2) * m + c1; }
};

ShiftedCubic shifted_cubic(double xi, const Params& p) {
  const double dx2 = p.delta * p.delta * xi * xi;
  return {2.0 * p.gamma_z, 4.0 * dx2 + 4.0 * p.omega * p.omega, 8.0 * p.gamma_z * dx2};
}

cplx polish(const ShiftedCubic& c, cplx m) {
  for (int it = 0; it < 3; ++it) {
    const cplx f = c.value(m);
    const cplx d = c.slope(m);
    if (std::abs(d) == 0.0) break;
    const cplx next = m - f / d;
    if (!(std::abs(c.value(next)) < std::abs(f))) break;
    m = next;
  }
  return m;
}

double norm1(const Matrix3c& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

Eigen::Vector3cd cross(const Eigen::Vector3cd& a, const Eigen::Vector3cd& b) {
  return Eigen::Vector3cd(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0));
}

// Null vector of (q - lambda I) from the largest cross product of two rows.
Eigen::Vector3cd null_vector(const Matrix3c& q, cplx lambda) {
  const Matrix3c m = q - lambda * Matrix3c::Identity();
  const Eigen::Vector3cd r0 = m.row(0).transpose(), r1 = m.row(1).transpose(), r2 = m.row(2).transpose();
  Eigen::Vector3cd best = cross(r0, r1);
  for (const auto& c : {cross(r0, r2), cross(r1, r2)}) {
    if (c.norm() > best.norm()) best = c;
  }
  return best;
}

}  // namespace

SymbolMatrix build_symbol(double xi, const Params& p) {
  SymbolMatrix sm;
  sm.xi = xi;
  const double d = -2.0 * p.gamma_p * xi * xi;
  auto& q = sm.q;
  q.setZero();
  q(0, 0) = d;
  q(1, 1) = d - 2.0 * p.gamma_z;
  q(2, 2) = d;
  q(0, 2) = -2.0 * I * xi * p.delta;
  q(2, 0) = -2.0 * I * xi * p.delta;
  q(1, 2) = p.omega;
  q(2, 1) = -4.0 * p.omega;
  return sm;
}

CharCoeffs char_coeffs(double xi, const Params& p) {
  const double gp = p.gamma_p, gz = p.gamma_z, D = p.delta, W = p.omega;
  const double x2 = xi * xi;
  CharCoeffs c;
  c.a1 = 6.0 * gp * x2 + 2.0 * gz;
  c.a2 = 12.0 * gp * gp * x2 * x2 + (4.0 * D * D + 8.0 * gp * gz) * x2 + 4.0 * W * W;
  c.a3 = x2 * (8.0 * gp * gp * gp * x2 * x2 + (8.0 * D * D * gp + 8.0 * gp * gp * gz) * x2 +
               8.0 * W * W * gp + 8.0 * D * D * gz);
  return c;
}

std::array<cplx, 3> cardano_eigenvalues(double xi, const Params& pr, bool* well_conditioned) {
  const double gp = pr.gamma_p, gz = pr.gamma_z, D = pr.delta, W = pr.omega;
  const double x2 = xi * xi;
  const double D2 = D * D, W2 = W * W, gz2 = gz * gz;
  const double p = 12.0 * D2 * D2 * D2 * x2 * x2 * x2 + 12.0 * D2 * D2 * (3.0 * W2 + 2.0 * gz2) * x2 * x2 +
                   12.0 * D2 * (3.0 * W2 * W2 - 5.0 * W2 * gz2 + gz2 * gz2) * x2 +
                   3.0 * W2 * W2 * (4.0 * W2 - gz2);
  const double q = 4.0 * gz * (-18.0 * D2 * x2 + 9.0 * W2 - 2.0 * gz2);
  const double r = 4.0 * D2 * x2 + 4.0 * W2 - 4.0 / 3.0 * gz2;
  const cplx S = std::pow(q + 12.0 * std::sqrt(cplx(p)), 1.0 / 3.0);
  const double b = -2.0 * gp * x2 - 2.0 / 3.0 * gz;
  const double scale = std::sqrt(std::abs(r)) + std::cbrt(std::abs(q));
  const bool ok = std::isfinite(S.real()) && std::isfinite(S.imag()) && std::abs(S) > 1e-6 * scale &&
                  std::abs(S) > 0.0;
  if (well_conditioned) *well_conditioned = ok;
  if (!ok) return {cplx(b), cplx(b), cplx(b)};
  const double h = std::sqrt(3.0) / 2.0;
  const cplx l1 = b + S / 3.0 - r / S;
  const cplx mid = b - S / 6.0 + r / (2.0 * S);
  const cplx off = I * h * (S / 3.0 + r / S);
  std::array<cplx, 3> lam{l1, mid + off, mid - off};
  const auto cubic = shifted_cubic(xi, pr);
  const double shift = 2.0 * gp * x2;
  for (auto& l : lam) l = polish(cubic, l + shift) - shift;
  return lam;
}

std::array<cplx, 3> numeric_eigenvalues(const Matrix3c& q) {
  Eigen::ComplexEigenSolver<Matrix3c> es(q, false);
  const auto& v = es.eigenvalues();
  return {v(0), v(1), v(2)};
}

EigenSystem eigensystem(const SymbolMatrix& sm, const Params& p) {
  EigenSystem es;
  bool ok = false;
  es.lambdas = cardano_eigenvalues(sm.xi, p, &ok);
  if (!ok) {
    es.lambdas = numeric_eigenvalues(sm.q);
    es.numeric_fallback = true;
  }
  const double shift = 2.0 * p.gamma_p * sm.xi * sm.xi;
  const Matrix3c m = sm.q + shift * Matrix3c::Identity();
  const double scale = std::max(norm1(m), std::numeric_limits<double>::min());
  double gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) gap = std::min(gap, std::abs(es.lambdas[i] - es.lambdas[j]));
  if (!(gap > kGapLimit * scale)) fail(ErrorCode::DefectiveMatrix, "eigenvalues nearly coincide");

  const double gp2 = 2.0 * p.gamma_p * sm.xi * sm.xi;
  for (int c = 0; c < 3; ++c) {
    const cplx lam = es.lambdas[c];
    const cplx d1 = gp2 + lam;
    const cplx d2 = gp2 + 2.0 * p.gamma_z + lam;
    Eigen::Vector3cd v;
    bool use_ratio = std::abs(d1) > 1e-10 * scale && std::abs(d2) > 1e-10 * scale;
    if (use_ratio) {
      v << -2.0 * I * p.delta * sm.xi / d1, p.omega / d2, 1.0;
      const double res = ((sm.q - lam * Matrix3c::Identity()) * v).norm() / v.norm();
      if (!(res <= 1e-10 * scale)) use_ratio = false;
    }
    if (!use_ratio) v = null_vector(sm.q, lam);
    const double nv = v.norm();
    if (!(nv > 0.0) || !std::isfinite(nv)) fail(ErrorCode::DefectiveMatrix, "no eigenvector found");
    es.vectors.col(c) = v / nv;
  }
  Eigen::PartialPivLU<Matrix3c> lu(es.vectors);
  es.inverse = lu.inverse();
  es.condition = norm1(es.vectors) * norm1(es.inverse);
  if (!(es.condition <= kConditionLimit)) fail(ErrorCode::DefectiveMatrix, "eigenvector basis ill conditioned");
  return es;
}

StabilityReport stability_check(const Params& p, std::span<const double> xi_samples) {
  StabilityReport rep;
  rep.max_real_part = -std::numeric_limits<double>::infinity();
  for (double xi : xi_samples) {
    bool ok = false;
    auto lam = cardano_eigenvalues(xi, p, &ok);
    if (!ok) lam = numeric_eigenvalues(build_symbol(xi, p).q);
    ++rep.samples;
    if (xi != 0.0) {
      for (const auto& l : lam) {
        rep.max_real_part = std::max(rep.max_real_part, l.real());
        if (!(l.real() < 0.0)) fail(ErrorCode::StabilityViolation, "eigenvalue with Re >= 0 at xi != 0");
      }
    } else {
      std::sort(lam.begin(), lam.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
      const double tol = 1e-12 * std::max(1.0, std::abs(lam[2]));
      rep.zero_eigenvalue = std::abs(lam[0]);
      if (!(std::abs(lam[0]) <= tol)) fail(ErrorCode::StabilityViolation, "no zero eigenvalue at xi = 0");
      for (int i = 1; i < 3; ++i) {
        const bool strict = p.gamma_z > 0.0;
        if (strict ? !(lam[i].real() < 0.0) : !(lam[i].real() <= tol)) {
          fail(ErrorCode::StabilityViolation, "non-decaying eigenvalue at xi = 0");
        }
      }
    }
  }
  return rep;
}

Matrix3c expm_pade(const Matrix3c& a) {
  const double nrm = norm1(a);
  int s = 0;
  if (nrm > 0.5) s = std::max(0, static_cast<int>(std::ceil(std::log2(nrm / 0.5))));
  const Matrix3c A = a / std::ldexp(1.0, s);
  constexpr int order = 6;
  double c = 1.0;
  Matrix3c N = Matrix3c::Identity(), D = Matrix3c::Identity(), P = Matrix3c::Identity();
  for (int k = 1; k <= order; ++k) {
    c *= static_cast<double>(order - k + 1) / (static_cast<double>(k) * (2 * order - k + 1));
    P = P * A;
    N += c * P;
    D += ((k % 2 == 0) ? c : -c) * P;
  }
  Matrix3c X = D.partialPivLu().solve(N);
  for (int i = 0; i < s; ++i) X = X * X;
  return X;
}

Matrix3c exp_symbol(const SymbolMatrix& sm, double t, const EigenSystem* es) {
  if (t == 0.0) return Matrix3c::Identity();
  if (es && es->condition <= kConditionLimit) {
    Matrix3c d = Matrix3c::Zero();
    for (int i = 0; i < 3; ++i) d(i, i) = std::exp(t * es->lambdas[i]);
    return es->vectors * d * es->inverse;
  }
  const double shift = -sm.q(0, 0).real();  // 2 gamma_p xi^2
  const Matrix3c m = sm.q + shift * Matrix3c::Identity();
  return std::exp(-t * shift) * expm_pade(t * m);
}

Matrix3c exp_symbol(const SymbolMatrix& sm, double t, const Params& p) {
  if (t == 0.0) return Matrix3c::Identity();
  try {
    const auto es = eigensystem(sm, p);
    return exp_symbol(sm, t, &es);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DefectiveMatrix) throw;
    return exp_symbol(sm, t, nullptr);
  }
}

void check_resolution(const Params& p, double t, const SpatialGrid& grid) {
  const double sd = std::sqrt(4.0 * p.gamma_p * t);
  if (grid.spacing() > sd / 8.0) {
    fail(ErrorCode::GridUnderResolved, "grid spacing exceeds one eighth of the diffusion length");
  }
}

GreenMatrix green_function(const Params& p0, double t, const SpatialGrid& grid, double eps_tail) {
  const Params p = validate_params(p0);
  if (!(t > 0.0)) fail(ErrorCode::NonPositiveTime, "t must be > 0");
  check_resolution(p, t, grid);
  const auto n = grid.size();
  std::array<std::vector<cplx>, 9> spec;
  for (auto& s : spec) s.resize(n);
  auto fill = [&](std::size_t k, double xi, double w) {
    const Matrix3c e = exp_symbol(build_symbol(xi, p), t, p);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) spec[3 * i + j][k] += w * e(i, j);
  };
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      const double xi = grid.frequency(k);
      if (k == grid.nyquist_index()) {
        fill(k, xi, 0.5);
        fill(k, -xi, 0.5);
      } else {
        fill(k, xi, 1.0);
      }
    }
  });
  GreenMatrix g{grid, t, {}, {}, 0.0};
  double peak = 0.0, edge = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto v = fft::synthesize(grid, spec[3 * i + j]);
      g.max_imag_residue = std::max(g.max_imag_residue, fft::max_imag(v));
      g.entries[i][j] = fft::real_part(v);
      for (double x : g.entries[i][j]) peak = std::max(peak, std::abs(x));
      edge = std::max({edge, std::abs(g.entries[i][j].front()), std::abs(g.entries[i][j].back())});
    }
  }
  if (edge > eps_tail * std::max(1.0, peak)) {
    fail(ErrorCode::TailNotDecayed, "Green's function has not decayed at the grid boundary");
  }
  return g;
}

BlochField solve(const Params& p0, const InitialCondition& ic, double t, const SpatialGrid& grid) {
  const Params p = validate_params(p0);
  validate_initial(ic);
  if (t < 0.0 || !std::isfinite(t)) fail(ErrorCode::NonPositiveTime, "t must be >= 0");
  if (t == 0.0) return to_bloch(sample_initial(ic, grid));

  const auto n = grid.size();
  std::array<std::vector<cplx>, 3> u0;
  check_resolution(p, t, grid);
  const auto prof = bloch_profiles(ic);
  if (!prof) {
    const auto b = to_bloch(sample_initial(ic, grid));
    u0 = {fft::analyze(grid, b.rho_plus), fft::analyze(grid, b.c_i), fft::analyze(grid, b.rho_minus)};
  } else {
    for (auto& v : u0) v.resize(n);
  }

  std::array<std::vector<cplx>, 3> out;
  for (auto& v : out) v.assign(n, cplx(0.0));
  auto apply = [&](std::size_t k, double xi, double w) {
    Eigen::Vector3cd u;
    if (prof) {
      u << fourier(prof->rho_plus, xi), fourier(prof->c_i, xi), fourier(prof->rho_minus, xi);
    } else {
      u << u0[0][k], u0[1][k], u0[2][k];
    }
    const Eigen::Vector3cd r = exp_symbol(build_symbol(xi, p), t, p) * u;
    for (int i = 0; i < 3; ++i) out[i][k] += w * r(i);
  };
  parallel_for(n, [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) {
      const double xi = grid.frequency(k);
      if (k == grid.nyquist_index()) {
        if (prof) {
          apply(k, xi, 0.5);
          apply(k, -xi, 0.5);
        } else {
          apply(k, xi, 1.0);
          out[0][k] = out[0][k].real();
          out[1][k] = out[1][k].real();
          out[2][k] = out[2][k].real();
        }
      } else {
        apply(k, xi, 1.0);
      }
    }
  });

  BlochField f = zero_bloch(grid, t);
  f.rho_plus = fft::real_part(fft::synthesize(grid, out[0]));
  f.c_i = fft::real_part(fft::synthesize(grid, out[1]));
  f.rho_minus = fft::real_part(fft::synthesize(grid, out[2]));
  f.c_r = omega0::solve_cr(ic, t, grid, p);
  return f;
}

}  // namespace oqbm::spectral
