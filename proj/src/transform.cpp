#include "symspace/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symspace/cfunction.hpp"
#include "symspace/error.hpp"
#include "symspace/ode.hpp"
#include "symspace/special.hpp"
#include "symspace/spherical.hpp"

namespace symspace {

namespace {

constexpr double kPi = std::numbers::pi;

std::shared_ptr<const PanelGrid> grid_ptr(double lo, double hi, double width, int n) {
  return std::make_shared<const PanelGrid>(make_panel_grid(lo, hi, width, n));
}

double log_spectral_weight(const SpaceModel& X, const SpectralFunction& F, double nu) {
  switch (F.measure) {
    case SpectralMeasure::Heat:
      return 2.0 * F.t * (nu * nu + X.rho * X.rho);
    case SpectralMeasure::Omega:
      return std::log(omega_sup(X, nu));
    default:
      return 0.0;
  }
}

void require_h2(const SpaceModel& X) {
  if (X.m1 != 1.0 || X.m2 != 0.0) throw DomainError("Helgason mode calculus is implemented for H^2");
}

}  // namespace

TransformContext::TransformContext(const SpaceModel& X, const GridOptions& opt)
    : X_(X),
      opt_(opt),
      radial_(grid_ptr(0.0, opt.t_max, opt.radial_width, opt.radial_nodes)),
      spectral_(grid_ptr(0.0, opt.nu_max, opt.spectral_width, opt.spectral_nodes)) {
  const auto& ts = radial_->rule.x;
  const std::size_t nt = ts.size(), nn = spectral_->size();
  phi_.resize(nn * nt);
  for (std::size_t j = 0; j < nn; ++j) {
    const auto row = phi_rank_one_table(X_, cplx(0.0, spectral_->rule.x[j]), ts);
    for (std::size_t i = 0; i < nt; ++i) phi_[j * nt + i] = row[i].real();
  }
  density_.resize(nn);
  for (std::size_t j = 0; j < nn; ++j) density_[j] = plancherel_density(X_, spectral_->rule.x[j]);
  delta_.resize(nt);
  for (std::size_t i = 0; i < nt; ++i) delta_[i] = X_.density(ts[i]);
}

RadialFunction sample(const TransformContext& ctx, const std::function<cplx(double)>& f) {
  RadialFunction out{ctx.radial(), {}};
  for (double t : ctx.radial()->rule.x) out.values.push_back(f(t));
  return out;
}

SpectralFunction sample_spectrum(const TransformContext& ctx, const std::function<cplx(double)>& F,
                                 SpectralMeasure m, double t) {
  SpectralFunction out{ctx.spectral(), {}, m, t};
  for (double nu : ctx.spectral()->rule.x) out.values.push_back(F(nu));
  return out;
}

SpectralFunction spherical_transform(const TransformContext& ctx, const RadialFunction& f, double tail_tol) {
  const auto& r = ctx.radial()->rule;
  if (f.values.size() != r.size()) throw InconsistentInputError("spherical_transform: grid mismatch");
  // Truncation check: the integrand at the outermost node against its maximum.
  std::vector<cplx> fw(r.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    fw[i] = f.values[i] * r.w[i] * ctx.delta(i);
    peak = std::max(peak, std::abs(f.values[i]) * ctx.delta(i));
  }
  if (peak > 0.0 && std::abs(f.values.back()) * ctx.delta(r.size() - 1) > tail_tol * peak)
    throw ConvergenceError("spherical_transform: radial tail above tolerance; increase t_max");
  SpectralFunction F{ctx.spectral(), std::vector<cplx>(ctx.spectral()->size()), SpectralMeasure::Plancherel, 0.0};
  for (std::size_t j = 0; j < F.values.size(); ++j) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) s += fw[i] * ctx.phi(j, i);
    F.values[j] = s;
  }
  return F;
}

RadialFunction spherical_inverse(const TransformContext& ctx, const SpectralFunction& F, double tail_tol) {
  const auto& q = ctx.spectral()->rule;
  if (F.values.size() != q.size()) throw InconsistentInputError("spherical_inverse: grid mismatch");
  const SpaceModel& X = ctx.space();
  std::vector<cplx> Fw(q.size());
  double peak = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    Fw[j] = X.k_space * q.w[j] * ctx.density(j) * F.values[j];
    peak = std::max(peak, std::abs(F.values[j]) * ctx.density(j));
  }
  if (peak > 0.0 && std::abs(F.values.back()) * ctx.density(q.size() - 1) > tail_tol * peak)
    throw ConvergenceError("spherical_inverse: insufficient spectral decay; increase nu_max");
  RadialFunction f{ctx.radial(), std::vector<cplx>(ctx.radial()->size())};
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) s += Fw[j] * ctx.phi(j, i);
    f.values[i] = s;
  }
  return f;
}

cplx spherical_inverse_at(const TransformContext& ctx, const SpectralFunction& F, double t) {
  const auto& q = ctx.spectral()->rule;
  cplx s = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j)
    s += q.w[j] * ctx.density(j) * F.values[j] * phi_rank_one(ctx.space(), cplx(0.0, q.x[j]), t);
  return ctx.space().k_space * s;
}

double l2_norm_sq(const TransformContext& ctx, const RadialFunction& f) {
  const auto& r = ctx.radial()->rule;
  double s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) s += r.w[i] * ctx.delta(i) * std::norm(f.values[i]);
  return s;
}

double spectral_norm_sq(const TransformContext& ctx, const SpectralFunction& F) {
  const auto& q = F.grid->rule;
  const SpaceModel& X = ctx.space();
  double s = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const double a = std::abs(F.values[j]);
    if (a == 0.0) continue;
    s += q.w[j] * plancherel_density(X, q.x[j]) * std::exp(log_spectral_weight(X, F, q.x[j]) + 2.0 * std::log(a));
  }
  return X.k_space * s;
}

CalibrationRecord calibrate_constants(const SpaceModel& X) {
  GridOptions opt;
  opt.t_max = 8.0;
  opt.nu_max = 24.0;
  const TransformContext ctx(X, opt);
  const RadialFunction f = sample(ctx, [](double t) { return std::exp(-2.0 * t * t); });
  const SpectralFunction F = spherical_transform(ctx, f, 1e-12);
  // Unit-constant inverse: I(t) = int F phi |c|^-2 dnu.
  SpaceModel unit = X;
  unit.k_space = 1.0;
  const auto& q = ctx.spectral()->rule;
  std::vector<double> I(ctx.radial()->size());
  for (std::size_t i = 0; i < I.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) s += q.w[j] * ctx.density(j) * F.values[j].real() * ctx.phi(j, i);
    I[i] = s;
  }
  double num = 0.0, den = 0.0, fmax = 0.0;
  for (std::size_t i = 0; i < I.size(); ++i) {
    num += I[i] * f.values[i].real();
    den += I[i] * I[i];
    fmax = std::max(fmax, std::abs(f.values[i].real()));
  }
  CalibrationRecord rec{num / den, 1.0 / (2.0 * kPi * X.c_delta), 0.0};
  for (std::size_t i = 0; i < I.size(); ++i)
    rec.residual = std::max(rec.residual, std::abs(rec.k_space * I[i] - f.values[i].real()) / fmax);
  if (rec.residual > 1e-9) throw ConfigError("calibrate_constants: calibration residual above threshold");
  return rec;
}

double heat_multiplier(const SpaceModel& X, double nu, double t) {
  return std::exp(-t * (nu * nu + X.rho * X.rho));
}

namespace {

// h_t(r) = k int_R e^{-t(nu^2+rho^2)} Phi_{i nu}(r) / c(-i nu) dnu on Im nu = r/2t.
double heat_kernel_shifted(const SpaceModel& X, double t, double r) {
  const double eta = r / (2.0 * t);
  const double L = std::sqrt(45.0 / t) + 2.0;
  const Rule q = panels(-L, L, std::min(0.5, 2.0 * std::sqrt(t)), 16);
  const cplx log2ch = std::log(2.0 * std::cosh(cplx(r)));
  const double lg_a = std::lgamma(X.alpha_j + 1.0);
  cplx s = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const cplx nu(q.x[k], eta);
    const cplx lam = cplx(0.0, 1.0) * nu;
    const cplx ml = -lam;
    // log(1/c(-lambda))
    const cplx log_rc = -(X.rho - ml) * std::log(2.0) - lg_a - lgamma(ml) + lgamma(0.5 * (ml + X.rho)) +
                        lgamma(0.5 * (ml + 0.5 * X.m1 + 1.0));
    const cplx log_pref = -t * (nu * nu + X.rho * X.rho) + (lam - X.rho) * log2ch + log_rc;
    const Hyp2f1 h = hyp2f1(0.5 * (X.rho - lam), 0.5 * (X.alpha_j - X.beta_j + 1.0 - lam), 1.0 - lam,
                            1.0 / std::pow(std::cosh(r), 2));
    s += q.w[k] * std::exp(log_pref) * h.value;
  }
  return X.k_space * s.real();
}

bool use_shift(double t, double r) { return r >= 0.5 && r * r / (4.0 * t) > 2.0; }

}  // namespace

std::vector<double> heat_kernel(const SpaceModel& X, double t, const std::vector<double>& rs) {
  if (!(t > 0.0)) throw DomainError("heat_kernel: t must be positive");
  std::vector<double> out(rs.size());
  std::vector<std::pair<double, std::size_t>> direct;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const double r = std::abs(rs[i]);
    if (use_shift(t, r))
      out[i] = heat_kernel_shifted(X, t, r);
    else
      direct.push_back({r, i});
  }
  if (direct.empty()) return out;
  std::sort(direct.begin(), direct.end());
  std::vector<double> ts;
  for (const auto& d : direct) ts.push_back(d.first);
  const double nu_max = std::sqrt(40.0 / t) + 4.0;
  const Rule q = panels(0.0, nu_max, 0.5, 16);
  std::vector<double> acc(ts.size(), 0.0);
  for (std::size_t j = 0; j < q.size(); ++j) {
    const double w = q.w[j] * heat_multiplier(X, q.x[j], t) * plancherel_density(X, q.x[j]);
    const auto row = phi_rank_one_table(X, cplx(0.0, q.x[j]), ts);
    for (std::size_t i = 0; i < ts.size(); ++i) acc[i] += w * row[i].real();
  }
  for (std::size_t i = 0; i < ts.size(); ++i) out[direct[i].second] = X.k_space * acc[i];
  return out;
}

double heat_kernel(const SpaceModel& X, double t, double r) { return heat_kernel(X, t, std::vector<double>{r})[0]; }

double heat_kernel_h3_closed(const SpaceModel& X, double t, double r) {
  if (X.m1 != 2.0 || X.m2 != 0.0) throw DomainError("closed-form heat kernel is for H^3");
  const double rs = r == 0.0 ? 1.0 : r / std::sinh(r);
  return std::exp(-t * X.rho * X.rho - r * r / (4.0 * t)) * std::pow(4.0 * kPi * t, -1.5) * rs;
}

SpectralFunction heat_multiply(const TransformContext& ctx, const SpectralFunction& F, double t) {
  if (!(t > 0.0)) throw DomainError("heat transform needs t > 0");
  SpectralFunction out = F;
  for (std::size_t j = 0; j < out.values.size(); ++j)
    out.values[j] *= heat_multiplier(ctx.space(), F.grid->rule.x[j], t);
  return out;
}

RadialFunction heat_transform(const TransformContext& ctx, const RadialFunction& f, double t) {
  return spherical_inverse(ctx, heat_multiply(ctx, spherical_transform(ctx, f), t), 1.0);
}

double image_norm_t(const TransformContext& ctx, const SpectralFunction& F, double t) {
  SpectralFunction G = F;
  G.measure = SpectralMeasure::Heat;
  G.t = t;
  const double v = spectral_norm_sq(ctx, G);
  if (!std::isfinite(v)) throw ConvergenceError("image_norm_t: divergent weighted tail");
  return v;
}

// ---- Helgason ----

std::vector<cplx> DiskFunction::mode(int n) const {
  std::vector<cplx> out(grid->size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    cplx s = 0.0;
    for (int j = 0; j < n_angles; ++j) s += at_node(i, j) * std::exp(cplx(0.0, -n * 2.0 * kPi * j / n_angles));
    out[i] = s / double(n_angles);
  }
  return out;
}

cplx DiskFunction::operator()(double t, double theta) const {
  if (t < 0.0) {
    t = -t;
    theta += kPi;
  }
  if (t > grid->hi) return 0.0;
  const int nm = (n_angles - 1) / 2;
  cplx s = 0.0;
  for (int n = -nm; n <= nm; ++n) s += grid->interpolate(mode(n), t) * std::exp(cplx(0.0, n * theta));
  return s;
}

DiskFunction sample_disk(std::shared_ptr<const RadialGrid> grid, int n_angles,
                         const std::function<cplx(double, double)>& f) {
  DiskFunction d{grid, n_angles, {}};
  for (double t : grid->rule.x)
    for (int j = 0; j < n_angles; ++j) d.values.push_back(f(t, 2.0 * kPi * j / n_angles));
  return d;
}

std::vector<cplx> circle_mode_kernels(const SpaceModel& X, cplx lambda, int n_max, double t) {
  std::vector<cplx> E(n_max + 1, 0.0);
  if (t == 0.0) {
    E[0] = 1.0;
    return E;
  }
  const cplx p = -(lambda + X.rho);
  const double ch = std::cosh(t), sh = std::sinh(t);
  auto g = [&](double psi) { return std::exp(p * std::log(ch - sh * std::cos(psi))); };
  // Trapezoid on [0, 2 pi) folded by symmetry onto [0, pi].
  std::vector<cplx> samples;  // g at psi_k = pi k / H, k = 0..H
  int H = 32;
  for (int k = 0; k <= H; ++k) samples.push_back(g(kPi * k / H));
  auto evaluate = [&](std::vector<cplx>& out, double& scale) {
    const int M = 2 * H;
    scale = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      cplx s = 0.0;
      for (int k = 0; k <= H; ++k) {
        const double w = (k == 0 || k == H) ? 1.0 : 2.0;
        s += w * samples[k] * std::cos(n * kPi * k / H);
        if (n == 0) scale += w * std::abs(samples[k]);
      }
      out[n] = s / double(M);
    }
    scale /= M;
  };
  std::vector<cplx> prev(n_max + 1);
  double scale = 0.0;
  evaluate(prev, scale);
  for (int it = 0; it < 12; ++it) {
    std::vector<cplx> refined(2 * H + 1);
    for (int k = 0; k <= 2 * H; ++k) refined[k] = (k % 2 == 0) ? samples[k / 2] : g(kPi * k / (2 * H));
    samples.swap(refined);
    H *= 2;
    evaluate(E, scale);
    double diff = 0.0;
    for (int n = 0; n <= n_max; ++n) diff = std::max(diff, std::abs(E[n] - prev[n]));
    if (diff <= 1e-14 * scale) return E;
    prev = E;
  }
  throw ConvergenceError("circle_mode_kernels: trapezoid did not converge");
}

cplx circle_mode_kernel(const SpaceModel& X, cplx lambda, int n, double t) {
  return circle_mode_kernels(X, lambda, std::abs(n), t)[std::abs(n)];
}

namespace {

// E_n = (1-z^2)^s z^n (s)_n/n! 2F1(s+n, s; n+1; z^2), z = tanh(t/2), s = lambda + rho.
cplx circle_mode_series(cplx s, int n, double t, cplx* dt) {
  const double z = std::tanh(0.5 * t), z2 = z * z;
  cplx poch = 1.0;
  for (int k = 0; k < n; ++k) poch *= (s + double(k)) / double(k + 1);
  const Hyp2f1 h = hyp2f1(s + double(n), s, double(n + 1), z2);
  const cplx A = std::exp(s * std::log(1.0 - z2)) * std::pow(z, n) * poch;
  if (dt) {
    const cplx dlogA = -2.0 * s * z / (1.0 - z2) + double(n) / z;
    *dt = A * (dlogA * h.value + 2.0 * z * h.derivative) * 0.5 * (1.0 - z2);
  }
  return A * h.value;
}

}  // namespace

std::vector<cplx> circle_mode_table(const SpaceModel& X, cplx lambda, int n, const std::vector<double>& ts) {
  require_h2(X);
  n = std::abs(n);
  const cplx s = lambda + X.rho;
  const double t0 = std::min(0.45, 1.0 / std::max(1.0, std::abs(s)));
  std::vector<cplx> out(ts.size());
  std::vector<double> sig;
  std::size_t first = ts.size();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0 && ts[i] < ts[i - 1]) throw DomainError("circle_mode_table: ts must be ascending");
    if (ts[i] <= t0) {
      out[i] = ts[i] == 0.0 ? cplx(n == 0 ? 1.0 : 0.0) : circle_mode_series(s, n, ts[i], nullptr);
    } else {
      if (first == ts.size()) first = i;
      sig.push_back(ts[i] - t0);
    }
  }
  if (sig.empty()) return out;
  std::vector<double> uniq;
  std::vector<std::size_t> map(sig.size());
  for (std::size_t j = 0; j < sig.size(); ++j) {
    if (uniq.empty() || sig[j] > uniq.back()) uniq.push_back(sig[j]);
    map[j] = uniq.size() - 1;
  }
  cplx d0;
  const cplx e0 = circle_mode_series(s, n, t0, &d0);
  const auto states = integrate_radial(X, lambda, t0, {e0, d0}, 1.0, uniq, 1e-13, double(n) * n);
  for (std::size_t j = 0; j < sig.size(); ++j) out[first + j] = states[map[j]][0];
  return out;
}

HelgasonContext::HelgasonContext(const SpaceModel& X, const GridOptions& opt, int n_max)
    : X_(X),
      n_max_(n_max),
      radial_(grid_ptr(0.0, opt.t_max, opt.radial_width, opt.radial_nodes)),
      spectral_(grid_ptr(0.0, opt.nu_max, opt.spectral_width, opt.spectral_nodes)) {
  require_h2(X);
  const std::size_t nt = radial_->size(), nn = spectral_->size();
  E_.resize(std::size_t(n_max + 1) * nn * nt);
  for (int n = 0; n <= n_max; ++n)
    for (std::size_t j = 0; j < nn; ++j) {
      const auto e = circle_mode_table(X_, cplx(0.0, spectral_->rule.x[j]), n, radial_->rule.x);
      std::copy(e.begin(), e.end(), E_.begin() + std::ptrdiff_t((std::size_t(n) * nn + j) * nt));
    }
  density_.resize(nn);
  for (std::size_t j = 0; j < nn; ++j) density_[j] = plancherel_density(X_, spectral_->rule.x[j]);
  delta_.resize(nt);
  for (std::size_t i = 0; i < nt; ++i) delta_[i] = X_.density(radial_->rule.x[i]);
}

cplx HelgasonContext::E(int n, std::size_t j, std::size_t i) const {
  n = std::abs(n);
  if (n > n_max_) throw DomainError("HelgasonContext: mode beyond n_max");
  return E_[(std::size_t(n) * spectral_->size() + j) * radial_->size() + i];
}

HelgasonSpectrum helgason_transform(const HelgasonContext& ctx, const DiskFunction& f, bool reflected) {
  if (f.grid->size() != ctx.radial()->size()) throw InconsistentInputError("helgason_transform: grid mismatch");
  if (f.n_angles < 2 * ctx.n_max() + 1) throw ConfigError("helgason_transform: too few angles for n_max");
  const int N = ctx.n_max();
  const auto& r = ctx.radial()->rule;
  const std::size_t nn = ctx.spectral()->size();
  HelgasonSpectrum F{ctx.spectral(), N, std::vector<cplx>(std::size_t(2 * N + 1) * nn)};
  for (int n = -N; n <= N; ++n) {
    const auto fn = f.mode(n);
    for (std::size_t j = 0; j < nn; ++j) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        const cplx e = ctx.E(n, j, i);
        s += r.w[i] * ctx.delta(i) * fn[i] * (reflected ? e : std::conj(e));
      }
      F.values[std::size_t(n + N) * nn + j] = s;
    }
  }
  return F;
}

DiskFunction helgason_inverse(const HelgasonContext& ctx, const HelgasonSpectrum& F, int n_angles) {
  const int N = F.n_max;
  const auto& q = ctx.spectral()->rule;
  const std::size_t nt = ctx.radial()->size();
  DiskFunction f{ctx.radial(), n_angles, std::vector<cplx>(nt * n_angles, 0.0)};
  for (int n = -N; n <= N; ++n) {
    for (std::size_t i = 0; i < nt; ++i) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < q.size(); ++j) s += q.w[j] * ctx.density(j) * F.at(n, j) * ctx.E(n, j, i);
      s *= ctx.space().k_space;
      for (int a = 0; a < n_angles; ++a)
        f.values[i * n_angles + a] += s * std::exp(cplx(0.0, n * 2.0 * kPi * a / n_angles));
    }
  }
  return f;
}

double mode_truncation_error(const HelgasonSpectrum& F) {
  double edge = 0.0, all = 0.0;
  const std::size_t nn = F.grid->size();
  for (int n = -F.n_max; n <= F.n_max; ++n)
    for (std::size_t j = 0; j < nn; ++j) {
      const double a = std::abs(F.at(n, j));
      all = std::max(all, a);
      if (std::abs(n) == F.n_max) edge = std::max(edge, a);
    }
  return all > 0.0 ? edge / all : 0.0;
}

cplx intertwining_scalar(const SpaceModel& X, cplx lambda, int n, double t_star) {
  require_h2(X);
  const cplx num = circle_mode_kernel(X, lambda, n, t_star);
  const cplx den = circle_mode_kernel(X, -lambda, n, t_star);
  if (std::abs(den) < 1e-10 * std::max(1.0, std::abs(num)))
    throw SingularValueError("intertwining_scalar: Poisson transform nearly vanishes at x*");
  return num / den;
}

}  // namespace symspace
