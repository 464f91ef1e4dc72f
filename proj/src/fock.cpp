#include "symspace/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unsupported/Eigen/FFT>

#include "symspace/cfunction.hpp"
#include "symspace/error.hpp"
#include "symspace/quadrature.hpp"

namespace symspace {

namespace {

constexpr double kPi = std::numbers::pi;

int pow2_at_least(double x) {
  int n = 1;
  while (n < x) n *= 2;
  return n;
}

int wrap(int j, int N) { return ((j % N) + N) % N; }

}  // namespace

cplx ASeries::operator()(cplx z) const {
  cplx s = 0.0;
  for (int j = -J; j <= J; ++j) {
    const double v = nu(j);
    s += amp[j + J] * std::exp(cplx(0.0, v) * z - tau * v * v);
  }
  return s;
}

std::vector<cplx> ASeries::on_line(const LineGrid& grid, double y, double shift) const {
  std::vector<cplx> out(grid.size());
  if (std::abs(grid.h - h) <= 1e-14 * h && int(grid.size()) <= N) {
    std::vector<cplx> in(N, 0.0), res;
    for (int j = -J; j <= J; ++j) {
      const double v = nu(j);
      in[wrap(j, N)] = amp[j + J] * std::exp(-tau * v * v - v * y + shift);
    }
    Eigen::FFT<double> fft;
    fft.inv(res, in);
    for (std::size_t k = 0; k < grid.size(); ++k) out[k] = double(N) * res[wrap(int(k) - grid.half, N)];
    return out;
  }
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const cplx z(grid.s(k), y);
    cplx s = 0.0;
    for (int j = -J; j <= J; ++j) {
      const double v = nu(j);
      s += amp[j + J] * std::exp(cplx(0.0, v) * z - tau * v * v + shift);
    }
    out[k] = s;
  }
  return out;
}

ASeries a_series(const TransformContext& ctx, const SpectralFunction& F, double tau, const ASeriesOptions& opt) {
  const SpaceModel& X = ctx.space();
  const auto& g = *ctx.spectral();
  if (F.values.size() != g.size()) throw InconsistentInputError("a_series: spectrum not on the context grid");
  ASeries u;
  u.h = opt.h;
  u.tau = tau;
  u.N = pow2_at_least(opt.period / opt.h);
  u.dnu = 2.0 * kPi / (u.N * u.h);
  u.J = int(std::floor(g.hi / u.dnu));
  if (2 * u.J + 1 > u.N) throw DomainError("a_series: line step too coarse for the spectral band");
  u.amp.assign(2 * u.J + 1, 0.0);
  for (int j = -u.J; j <= u.J; ++j) {
    const double v = u.nu(j);
    const double w = (std::abs(j) == u.J) ? 0.5 : 1.0;
    u.amp[j + u.J] = w * u.dnu * X.k_space * g.interpolate(F.values, std::abs(v)) * psi_multiplier(X, v);
  }
  return u;
}

FockFunction lambda_t(const TransformContext& ctx, const SpectralFunction& fhat, double t, const ASeriesOptions& opt) {
  if (!(t > 0.0)) throw DomainError("lambda_t: t must be positive");
  return {a_series(ctx, fhat, t, opt), t};
}

cplx lambda_t_convolution(const HorocycleFunction& lf, double t, cplx z) {
  if (!(t > 0.0)) throw DomainError("lambda_t_convolution: t must be positive");
  const std::size_t n = lf.grid.size();
  cplx s = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double w = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
    const cplx d = z - lf.grid.s(k);
    s += w * lf.at(0, k) * std::exp(-d * d / (4.0 * t));
  }
  return s * lf.grid.h / std::sqrt(4.0 * kPi * t);
}

namespace {

// Y range that carries every nu node with amplitude above the floor: the weight e^{-(sqrt t nu + Y/2 sqrt t)^2}
// peaks at Y = -2 t nu.
double y_range(const ASeries& u, double t, double floor) {
  double mx = 0.0;
  for (const auto& a : u.amp) mx = std::max(mx, std::abs(a));
  double nu_eff = 0.0;
  for (int j = -u.J; j <= u.J; ++j)
    if (std::abs(u.amp[j + u.J]) > floor * mx) nu_eff = std::max(nu_eff, std::abs(u.nu(j)));
  return 2.0 * t * nu_eff + 12.0 * std::sqrt(t);
}

Rule y_rule(double R, double t) { return panels(-R, R, std::min(0.5, std::sqrt(t)), 16); }

}  // namespace

double fock_norm(const SpaceModel& X, const FockFunction& phi, const FockNormOptions& opt) {
  const double t = phi.t;
  const LineGrid grid = make_line_grid(opt.x_max, phi.u.h);
  const Rule q = y_rule(y_range(phi.u, t, opt.amp_floor), t);
  double acc = 0.0, peak = 0.0, edge = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    // |Phi|^2 e^{-Y^2/2t}: half of the Gaussian goes into each factor.
    const std::vector<cplx> v = phi.u.on_line(grid, q.x[i], -q.x[i] * q.x[i] / (4.0 * t));
    double row = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const double w = (k == 0 || k + 1 == v.size()) ? 0.5 : 1.0;
      row += w * std::norm(v[k]);
      peak = std::max(peak, std::norm(v[k]));
    }
    edge = std::max({edge, std::norm(v.front()), std::norm(v.back())});
    acc += q.w[i] * row * grid.h;
  }
  if (peak > 0.0 && edge > 1e-12 * peak) throw ConvergenceError("fock_norm: Phi not decayed at |X| = x_max");
  return 0.5 * X.c_delta * acc / std::sqrt(2.0 * kPi * t);
}

HorocycleFunction gaussian_average(const FockFunction& phi, const LineGrid& grid, double tail_tol) {
  const double t = phi.t;
  const double R = y_range(phi.u, t, 1e-14);
  // Tail estimate: largest remaining integrand weight at |Y| = R.
  double tail = 0.0, mass = 0.0;
  for (int j = -phi.u.J; j <= phi.u.J; ++j) {
    const double v = phi.u.nu(j), a = std::abs(phi.u.amp[j + phi.u.J]);
    const double e = std::sqrt(t) * std::abs(v) - R / (2.0 * std::sqrt(t));
    tail += a * std::exp(-e * e) * (e < 0.0 ? 1.0 : 0.0);
    mass += a;
  }
  if (mass > 0.0 && tail > tail_tol * mass) throw ConvergenceError("gaussian_average: Y truncation too small");
  const Rule q = y_rule(R, t);
  HorocycleFunction out{grid, 0, std::vector<cplx>(grid.size(), 0.0)};
  const double norm = 1.0 / std::sqrt(4.0 * kPi * t);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const std::vector<cplx> v = phi.u.on_line(grid, q.x[i], -q.x[i] * q.x[i] / (4.0 * t));
    for (std::size_t k = 0; k < v.size(); ++k) out.values[k] += q.w[i] * norm * v[k];
  }
  return out;
}

RadialFunction segal_bargmann_invert(const TransformContext& ctx, const FockFunction& phi, const LineGrid& grid) {
  return lambda_inverse(ctx, gaussian_average(phi, grid));
}

std::vector<double> omega_y_grid(const SpaceModel& X, int levels) {
  std::vector<double> ys;
  for (int j = 0; j <= levels; ++j) ys.push_back(X.omega_bound * (1.0 - std::ldexp(1.0, -j)));
  return ys;
}

HorocycleDomainFunction lambda_tilde(const TransformContext& ctx, const SpectralFunction& F, const LineGrid& grid,
                                     const std::vector<double>& ys, double tau, const ASeriesOptions& opt) {
  const SpaceModel& X = ctx.space();
  for (double y : ys)
    if (!(std::abs(y) < X.omega_bound)) throw DomainError("lambda_tilde: slice outside Omega");
  ASeriesOptions o = opt;
  o.h = grid.h;
  HorocycleDomainFunction out{grid, ys, {}, a_series(ctx, F, 0.0, o)};
  if (tau > 0.0)
    for (int j = -out.u.J; j <= out.u.J; ++j)
      out.u.amp[j + out.u.J] *= std::exp(-tau * (out.u.nu(j) * out.u.nu(j) + X.rho * X.rho));
  for (double y : ys) {
    out.slices.push_back(out.u.on_line(grid, y));
    for (const auto& v : out.slices.back())
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ConvergenceError("lambda_tilde: divergent slice");
  }
  return out;
}

HxiNorm hxi_norm(const SpaceModel& X, const HorocycleDomainFunction& u) {
  HxiNorm r;
  const std::size_t n = u.ys.size();
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = horocycle_norm_sq(X, u.slice(i));
    if (!std::isfinite(v)) throw ConvergenceError("hxi_norm: slice divergence");
    r.slice_norms.push_back(v);
    if (v > r.sup_grid) {
      r.sup_grid = v;
      r.y_sup = u.ys[i];
    }
    pts.emplace_back(std::abs(u.ys[i]), v);
  }
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].second < pts[i - 1].second * (1.0 - 1e-12)) r.monotone = false;
  // Neville extrapolation in |y| to the boundary from the outermost slices.
  const std::size_t m = std::min<std::size_t>(5, pts.size());
  std::vector<double> xs, p;
  for (std::size_t i = pts.size() - m; i < pts.size(); ++i) {
    xs.push_back(pts[i].first);
    p.push_back(pts[i].second);
  }
  const double b = X.omega_bound;
  for (std::size_t lvl = 1; lvl < m; ++lvl)
    for (std::size_t i = 0; i + lvl < m; ++i)
      p[i] = ((b - xs[i + lvl]) * p[i] - (b - xs[i]) * p[i + 1]) / (xs[i] - xs[i + lvl]);
  r.value = std::max(p[0], r.sup_grid);
  return r;
}

std::vector<double> lambda_tilde_convergence(const TransformContext& ctx, const SpectralFunction& F, const LineGrid& grid,
                                             const std::vector<double>& ys, const std::vector<double>& ts) {
  const SpaceModel& X = ctx.space();
  const HorocycleDomainFunction ref = lambda_tilde(ctx, F, grid, ys);
  std::vector<double> out;
  for (double t : ts) {
    HorocycleDomainFunction d = lambda_tilde(ctx, F, grid, ys, t);
    for (std::size_t i = 0; i < ys.size(); ++i)
      for (std::size_t k = 0; k < grid.size(); ++k) d.slices[i][k] -= ref.slices[i][k];
    double worst = 0.0;
    for (std::size_t i = 0; i < ys.size(); ++i) worst = std::max(worst, horocycle_norm_sq(X, d.slice(i)));
    out.push_back(std::sqrt(worst));
  }
  return out;
}

}  // namespace symspace
