#include "symspace/experiments.hpp"

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "symspace/cfunction.hpp"
#include "symspace/crown.hpp"
#include "symspace/error.hpp"
#include "symspace/fock.hpp"
#include "symspace/quadrature.hpp"
#include "symspace/radon.hpp"
#include "symspace/spherical.hpp"
#include "symspace/transform.hpp"

namespace symspace {

// ---- configuration ----

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config: " + key + " expects a number, got '" + v + "'");
  }
}

long long to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long long d = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config: " + key + " expects an integer, got '" + v + "'");
  }
}

}  // namespace

void set_config_value(ExperimentConfig& c, const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "space") {
    build_space(v);  // validates
    c.space = v;
  } else if (key == "nu_max") {
    c.nu_max = to_double(key, v);
  } else if (key == "nu_width") {
    c.nu_width = to_double(key, v);
  } else if (key == "nu_nodes") {
    c.nu_nodes = int(to_int(key, v));
  } else if (key == "t_max") {
    c.t_max = to_double(key, v);
  } else if (key == "t_width") {
    c.t_width = to_double(key, v);
  } else if (key == "t_nodes") {
    c.t_nodes = int(to_int(key, v));
  } else if (key == "modes") {
    c.modes = int(to_int(key, v));
  } else if (key == "times") {
    c.times.clear();
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) c.times.push_back(to_double(key, trim(item)));
  } else if (key == "tolerance") {
    c.tolerance = to_double(key, v);
  } else if (key == "out") {
    c.out_dir = v;
  } else if (key == "seed") {
    const long long s = to_int(key, v);
    if (s < 0) throw ConfigError("config: seed must be nonnegative");
    c.seed = std::uint64_t(s);
  } else if (key == "samples") {
    c.samples = std::size_t(to_int(key, v));
  } else {
    throw ConfigError("config: unknown key '" + key + "'");
  }
}

void validate(const ExperimentConfig& c) {
  auto positive = [](const auto& o, const char* name) {
    if (o && !(*o > 0)) throw ConfigError(std::string("config: ") + name + " must be positive");
  };
  positive(c.nu_max, "nu_max");
  positive(c.nu_width, "nu_width");
  positive(c.nu_nodes, "nu_nodes");
  positive(c.t_max, "t_max");
  positive(c.t_width, "t_width");
  positive(c.t_nodes, "t_nodes");
  if (c.modes < 0) throw ConfigError("config: modes must be nonnegative");
  if (c.samples == 0) throw ConfigError("config: samples must be positive");
  for (double t : c.times)
    if (!(t > 0.0)) throw ConfigError("config: times must be positive");
  if (c.tolerance && !(*c.tolerance > 0.0 && *c.tolerance < 1.0)) throw ConfigError("config: tolerance must lie in (0, 1)");
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig c;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(n) + ": expected key=value");
    set_config_value(c, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config: cannot open " + path);
  return parse_config(f);
}

// ---- shared helpers ----

namespace {

constexpr double kPi = std::numbers::pi;

double bump(double t, double a, double lo, double hi) {
  return (t > lo && t < hi) ? std::exp(-a / ((t - lo) * (hi - t))) : 0.0;
}

double even_bump(double t, double a, double R) { return std::abs(t) < R ? std::exp(-a / (R * R - t * t)) : 0.0; }

// Test functions supported in [0, 2.4].
std::vector<RadialFn> bumps() {
  return {[](double t) { return bump(t, 6.0, 0.2, 2.4); }, [](double t) { return bump(t, 8.0, 0.5, 2.4); },
          [](double t) { return 3.0 * even_bump(t, 8.0, 2.4); }};
}
constexpr double kBumpSupport = 2.4;

GridOptions grid_from(const ExperimentConfig& c, double t_max, double nu_max) {
  GridOptions o;
  o.t_max = c.t_max.value_or(t_max);
  o.nu_max = c.nu_max.value_or(nu_max);
  if (c.t_width) o.radial_width = *c.t_width;
  if (c.t_nodes) o.radial_nodes = *c.t_nodes;
  if (c.nu_width) o.spectral_width = *c.nu_width;
  if (c.nu_nodes) o.spectral_nodes = *c.nu_nodes;
  return o;
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (auto x : v) m = std::max(m, std::abs(x));
  return m;
}

double rel_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  const double s = max_abs(b);
  return s > 0.0 ? m / s : m;
}

double envelope(const SpaceModel& X, double t) { return std::abs(phi_rank_one(X, 0.0, t)); }

RadialFunction sample_real(const TransformContext& ctx, const RadialFn& f) {
  return sample(ctx, [&](double r) { return cplx(f(r)); });
}

// Lambda f decays like e^{-rho |s|} unless 1/c(-i nu) is a polynomial (odd-dimensional real hyperbolic).
LineGrid line_grid_for(const SpaceModel& X) {
  const bool compact = X.m2 == 0.0 && std::fmod(X.m1, 2.0) == 0.0;
  return make_line_grid(compact ? 8.0 : 60.0, 0.02);
}

std::vector<double> times_or(const ExperimentConfig& c, std::vector<double> d) { return c.times.empty() ? d : c.times; }

struct Run {
  const ExperimentConfig& cfg;
  SpaceModel X;
  Report& r;
  double tol(double d) const { return cfg.tolerance.value_or(d); }
};

// ---- experiments ----

void cfun_validate(Run& run) {
  const SpaceModel& X = run.X;
  auto& r = run.r;
  r.tolerance = run.tol(1e-8);
  r.table.header = {"nu", "t", "phi_ode", "phi_connection", "rel_err"};
  // phi = c(l) Phi_l + c(-l) Phi_{-l}: the c-function is the connection coefficient between the
  // regular solution (ODE) and the Harish-Chandra series at infinity.
  double worst = 0.0, dens = 0.0;
  for (double nu : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const cplx l(0.0, nu);
    const std::vector<double> ts = {1.0, 2.0, 3.0};
    const auto ode = phi_rank_one_table(X, l, ts);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const cplx conn = c_rank_one(X, l) * hc_Phi(X, l, ts[i]) + c_rank_one(X, -l) * hc_Phi(X, -l, ts[i]);
      const double e = std::abs(ode[i] - conn) / envelope(X, ts[i]);
      worst = std::max(worst, e);
      r.table.rows.push_back({nu, ts[i], ode[i].real(), conn.real(), e});
    }
    const double d = 1.0 / std::norm(c_rank_one(X, l));
    dens = std::max(dens, std::abs(plancherel_density(X, nu) - d) / d);
  }
  const double crho = std::abs(c_rank_one(X, X.rho) - 1.0);
  r.metrics = {{"max_connection_err", worst}, {"c_rho_err", crho}, {"density_err", dens}};
  r.pass = worst <= r.tolerance && crho <= 1e-12 && dens <= 1e-10;
}

void spherical_validate(Run& run) {
  const SpaceModel& X = run.X;
  auto& r = run.r;
  r.tolerance = run.tol(1e-8);
  r.table.header = {"nu", "t", "phi_rank_one", "phi_integral", "rel_err"};
  double worst = 0.0, weyl = 0.0, origin = 0.0, lap = 0.0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const double nu = 0.5 + i, t = 0.25 + 0.5 * j;
      const cplx a = phi_rank_one(X, cplx(0, nu), t), b = phi_integral(X, cplx(0, nu), t);
      const double e = std::abs(a - b) / envelope(X, t);
      worst = std::max(worst, e);
      weyl = std::max(weyl, std::abs(a - phi_rank_one(X, cplx(0, -nu), t)) / envelope(X, t));
      r.table.rows.push_back({nu, t, a.real(), b.real(), e});
    }
  for (double nu : {0.0, 1.0, 5.0}) origin = std::max(origin, std::abs(phi_rank_one(X, cplx(0, nu), 0.0) - 1.0));
  const double h = 2e-3;
  for (double nu : {0.5, 2.0, 6.0})
    for (double t : {0.4, 1.3, 3.0}) {
      auto f = [&](double s) { return phi_rank_one(X, cplx(0, nu), s); };
      const cplx d1 = (-f(t + 2 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2 * h)) / (12 * h);
      const cplx d2 = (-f(t + 2 * h) + 16.0 * f(t + h) - 30.0 * f(t) + 16.0 * f(t - h) - f(t - 2 * h)) / (12 * h * h);
      const double ev = nu * nu + X.rho * X.rho;
      lap = std::max(lap, std::abs(d2 + X.drift(t) * d1 + ev * f(t)) / (ev * envelope(X, t)));
    }
  r.metrics = {{"max_rel_err", worst}, {"weyl_symmetry_err", weyl}, {"origin_err", origin}, {"laplacian_residual", lap}};
  r.pass = worst <= r.tolerance && weyl <= 1e-10 && origin <= 1e-12 && lap <= 1e-5;
}

void plancherel_roundtrip(Run& run) {
  auto& r = run.r;
  r.tolerance = run.tol(1e-6);
  const TransformContext ctx(run.X, grid_from(run.cfg, 2.5, 80.0));
  r.table.header = {"bump", "roundtrip_err", "norm_x", "norm_spectral", "norm_err"};
  double rt = 0.0, pl = 0.0;
  const auto fs = bumps();
  for (std::size_t b = 0; b < fs.size(); ++b) {
    const RadialFunction f = sample_real(ctx, fs[b]);
    const SpectralFunction F = spherical_transform(ctx, f);
    const double e = rel_diff(spherical_inverse(ctx, F).values, f.values);
    const double nx = l2_norm_sq(ctx, f), ns = spectral_norm_sq(ctx, F);
    const double ne = std::abs(nx - ns) / nx;
    rt = std::max(rt, e);
    pl = std::max(pl, ne);
    r.table.rows.push_back({double(b), e, nx, ns, ne});
  }
  r.metrics = {{"max_roundtrip_err", rt}, {"max_plancherel_err", pl}};
  r.pass = rt <= r.tolerance && pl <= r.tolerance;
}

void heat_kernel_table(Run& run) {
  const SpaceModel& X = run.X;
  auto& r = run.r;
  r.tolerance = run.tol(1e-6);
  r.table.header = {"t", "r", "h"};
  const bool h3 = X.m1 == 2.0 && X.m2 == 0.0;
  double mass_err = 0.0, closed = 0.0, monotone_violations = 0.0;
  for (double t : times_or(run.cfg, {0.1, 0.5, 1.0, 2.0})) {
    const Rule q = panels(0.0, 14.0 + 12.0 * std::sqrt(t), 0.25, 16);
    const auto h = heat_kernel(X, t, q.x);
    double mass = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      mass += q.w[i] * X.density(q.x[i]) * h[i];
      if (i > 0 && h[i] > 1e-290 && !(h[i] < h[i - 1])) monotone_violations += 1.0;
    }
    mass_err = std::max(mass_err, std::abs(mass - 1.0));
    for (int k = 0; k <= 24; ++k) {
      const double rr = 0.25 * k, v = heat_kernel(X, t, rr);
      r.table.rows.push_back({t, rr, v});
      if (h3 && rr > 0.0) closed = std::max(closed, std::abs(v / heat_kernel_h3_closed(X, t, rr) - 1.0));
    }
  }
  r.metrics = {{"mass_err", mass_err}, {"monotonicity_violations", monotone_violations}};
  if (h3) r.metrics["h3_closed_form_err"] = closed;
  r.pass = mass_err <= r.tolerance && monotone_violations == 0.0 && closed <= 1e-8;
}

void heat_semigroup(Run& run) {
  auto& r = run.r;
  r.tolerance = run.tol(1e-8);
  const TransformContext ctx(run.X, grid_from(run.cfg, 12.0, 30.0));
  const RadialFunction f = sample(ctx, [](double t) { return cplx(std::exp(-2.0 * t * t)); });
  const RadialFunction a = heat_transform(ctx, heat_transform(ctx, f, 0.2), 0.3);
  const RadialFunction b = heat_transform(ctx, f, 0.5);
  const double semi = rel_diff(a.values, b.values);
  r.table.header = {"t", "continuity_err"};
  double prev = 1e300;
  bool monotone = true;
  for (double t : {1e-1, 1e-2, 1e-3, 1e-4}) {
    RadialFunction d = heat_transform(ctx, f, t);
    for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= f.values[i];
    const double e = std::sqrt(l2_norm_sq(ctx, d) / l2_norm_sq(ctx, f));
    monotone = monotone && e < prev;
    prev = e;
    r.table.rows.push_back({t, e});
  }
  r.metrics = {{"semigroup_err", semi}, {"continuity_err_min_t", prev}, {"continuity_monotone", monotone ? 1.0 : 0.0}};
  r.pass = semi <= r.tolerance && monotone && prev <= 1e-3;
}

void convexity_sample_exp(Run& run) {
  auto& r = run.r;
  r.tolerance = run.tol(1e-9);
  const ConvexitySampleStats st = convexity_sample(run.X, run.cfg.seed, run.cfg.samples, false);
  const ConvexitySampleStats sh = convexity_sample(run.X, run.cfg.seed + 1, std::max<std::size_t>(run.cfg.samples / 5, 1), true);
  r.table.header = {"enriched", "samples", "violations", "max_ratio", "max_excess"};
  r.table.rows.push_back({0.0, double(st.samples), double(st.violations), st.max_ratio, st.max_excess});
  r.table.rows.push_back({1.0, double(sh.samples), double(sh.violations), sh.max_ratio, sh.max_excess});
  r.metrics = {{"violations", double(st.violations + sh.violations)},
               {"max_excess", std::max(st.max_excess, sh.max_excess)},
               {"sharpness_ratio", sh.max_ratio}};
  r.pass = st.violations + sh.violations == 0 && std::max(st.max_excess, sh.max_excess) <= r.tolerance &&
           sh.max_ratio >= 0.99;
}

double gaussian_a(const SpaceModel& X, double t, double s) {
  return std::exp(-t * X.rho * X.rho - s * s / (4.0 * t)) / std::sqrt(4.0 * kPi * t);
}

void abel_gaussian(Run& run) {
  const SpaceModel& X = run.X;
  auto& r = run.r;
  r.tolerance = run.tol(1e-6);
  const double t = times_or(run.cfg, {0.5})[0];
  const bool h3 = X.m1 == 2.0 && X.m2 == 0.0;
  const double support = 14.0;
  auto grid = std::make_shared<const RadialGrid>(make_panel_grid(0.0, support, 0.25, 16));
  const auto hv = heat_kernel(X, t, grid->rule.x);
  const RadialFunction hr{grid, std::vector<cplx>(hv.begin(), hv.end())};
  const RadialFn h = h3 ? RadialFn([&](double x) { return heat_kernel_h3_closed(X, t, x); })
                        : RadialFn([&](double x) { return hr(x).real(); });
  // R_rho h_t is the Euclidean heat kernel of A scaled by e^{-t rho^2} / c_delta.
  r.table.header = {"s", "R_rho_h", "gaussian", "lambda_h", "literal_gaussian"};
  double err = 0.0, literal = 0.0, peak = gaussian_a(X, t, 0.0);
  GridOptions o;
  o.t_max = support;
  o.nu_max = std::sqrt(60.0 / t) + 4.0;
  const TransformContext ctx(X, o);
  const LineGrid lg = make_line_grid(std::min(10.0, std::sqrt(4.0 * t * 40.0) + 2.0), 0.02);
  const HorocycleFunction lam = lambda_op(ctx, h, support, lg);
  double lam_peak = 0.0;
  for (std::size_t k = 0; k < lg.size(); ++k) lam_peak = std::max(lam_peak, std::abs(lam.values[k]));
  for (std::size_t k = 0; k < lg.size(); k += 25) {
    const double s = lg.s(k);
    const double a = abel(X, h, support, s), g = gaussian_a(X, t, s) / X.c_delta;
    err = std::max(err, std::abs(a - g) / (peak / X.c_delta));
    literal = std::max(literal, std::abs(lam.values[k] - gaussian_a(X, t, s)) / std::max(lam_peak, peak));
    r.table.rows.push_back({s, a, g, lam.values[k].real(), gaussian_a(X, t, s)});
  }
  r.metrics = {{"rrho_gaussian_err", err}, {"literal_lambda_gaussian_err", literal}};
  r.pass = err <= r.tolerance;
}

void lambda_unitarity(Run& run) {
  auto& r = run.r;
  r.tolerance = run.tol(1e-5);
  const TransformContext ctx(run.X, grid_from(run.cfg, 2.5, 80.0));
  const LineGrid lg = line_grid_for(run.X);
  r.table.header = {"bump", "norm_x", "norm_horocycle", "unitarity_err", "w_residual", "inverse_err"};
  double un = 0.0, w = 0.0, inv = 0.0;
  const auto fs = bumps();
  for (std::size_t b = 0; b < fs.size(); ++b) {
    const RadialFunction f = sample_real(ctx, fs[b]);
    const HorocycleFunction u = lambda_op(ctx, fs[b], kBumpSupport, lg);
    const double nx = l2_norm_sq(ctx, f), nh = horocycle_norm_sq(run.X, u);
    const double ue = std::abs(nh - nx) / nx, we = w_relation_residual(ctx, u);
    const double ie = rel_diff(lambda_inverse(ctx, u).values, f.values);
    un = std::max(un, ue);
    w = std::max(w, we);
    inv = std::max(inv, ie);
    r.table.rows.push_back({double(b), nx, nh, ue, we, ie});
  }
  r.metrics = {{"max_unitarity_err", un}, {"max_w_residual", w}, {"max_inverse_err", inv}};
  r.pass = un <= r.tolerance && w <= 1e-8 && inv <= r.tolerance;
}

void fock_unitarity(Run& run) {
  auto& r = run.r;
  r.tolerance = run.tol(1e-4);
  const TransformContext ctx(run.X, grid_from(run.cfg, 2.5, 80.0));
  const LineGrid lg = line_grid_for(run.X);
  r.table.header = {"t", "bump", "norm_x", "image_norm", "fock_norm", "fock_err", "inverse_err"};
  double img = 0.0, fk = 0.0, inv = 0.0;
  const auto fs = bumps();
  for (double t : times_or(run.cfg, {0.2}))
    for (std::size_t b = 0; b < fs.size(); ++b) {
      const RadialFunction f = sample_real(ctx, fs[b]);
      const SpectralFunction F = spherical_transform(ctx, f);
      const double nx = l2_norm_sq(ctx, f);
      const double ni = image_norm_t(ctx, heat_multiply(ctx, F, t), t);
      const FockFunction phi = lambda_t(ctx, F, t);
      const double nf = fock_norm(run.X, phi);
      const double ie = rel_diff(segal_bargmann_invert(ctx, phi, lg).values, f.values);
      img = std::max(img, std::abs(ni - nx) / nx);
      fk = std::max(fk, std::abs(nf - nx) / nx);
      inv = std::max(inv, ie);
      r.table.rows.push_back({t, double(b), nx, ni, nf, std::abs(nf - nx) / nx, ie});
    }
  r.metrics = {{"image_norm_err", img}, {"fock_norm_err", fk}, {"inverse_err", inv}};
  r.pass = img <= 1e-6 && fk <= r.tolerance && inv <= r.tolerance;
}

void hx_kernel(Run& run) {
  const SpaceModel& X = run.X;
  auto& r = run.r;
  r.tolerance = run.tol(1e-4);
  const TransformContext ctx(X, grid_from(run.cfg, 2.5, 30.0));
  const RadialFunction f = sample_real(ctx, bumps()[1]);
  const SpectralFunction F = heat_multiply(ctx, spherical_transform(ctx, f), 1.0);
  const double t = times_or(run.cfg, {0.5})[0];
  const SpectralFunction Ft = heat_multiply(ctx, spherical_transform(ctx, f), t);
  const cplx pts[5] = {{0.3, 0.2}, {0.8, -0.5}, {1.2, 0.7}, {0.0, 1.0}, {2.0, -0.3}};
  double restr = 0.0, bound = 0.0, repK = 0.0, repKt = 0.0, cr = 0.0;
  for (double x : {0.0, 0.4, 1.3, 2.2})
    restr = std::max(restr, std::abs(hx_extension(ctx, F, x) - spherical_inverse_at(ctx, F, x)) / max_abs(F.values));
  const double norm = std::sqrt(hx_norm(ctx, F));
  const auto& q = ctx.spectral()->rule;
  r.table.header = {"re_w", "im_w", "F_w_re", "F_w_im", "reproducing_err_K", "reproducing_err_Kt", "C_w"};
  for (cplx w : pts) {
    const cplx Fw = hx_extension(ctx, F, w);
    const double C = point_evaluation_constant(ctx, w);
    bound = std::max(bound, std::abs(Fw) / (C * norm));
    const double h = 1e-3;
    const cplx dx = (hx_extension(ctx, F, w + h) - hx_extension(ctx, F, w - h)) / (2.0 * h);
    const cplx dy = (hx_extension(ctx, F, w + cplx(0, h)) - hx_extension(ctx, F, w - cplx(0, h))) / (2.0 * h);
    cr = std::max(cr, std::abs(dx + cplx(0, 1) * dy) / std::max(1.0, std::abs(dx)));
    // Kernel spectra from the boundary integral, independent of the radial continuation.
    cplx lhs = 0.0, lhs_t = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
      const double nu = q.x[j];
      const cplx p = boundary_pairing(X, cplx(0, nu), w, 0.0);
      const double om = std::cosh(2.0 * nu * X.omega_bound);
      lhs += q.w[j] * ctx.density(j) * F.values[j] * std::conj(std::conj(p) / om) * om;
      lhs_t += q.w[j] * ctx.density(j) * Ft.values[j] * p;
    }
    lhs *= X.k_space;
    lhs_t *= X.k_space;
    const cplx Ftw = hx_extension(ctx, Ft, w);
    const double eK = std::abs(lhs - Fw) / std::abs(Fw), eKt = std::abs(lhs_t - Ftw) / std::abs(Ftw);
    repK = std::max(repK, eK);
    repKt = std::max(repKt, eKt);
    r.table.rows.push_back({w.real(), w.imag(), Fw.real(), Fw.imag(), eK, eKt, C});
  }
  // K_t = h_{2t}(sigma(w)^{-1} z) against the boundary product form.
  double two = 0.0;
  const cplx pairs[3][2] = {{{0.4, 0.3}, {0.1, 0.2}}, {{1.0, -0.4}, {0.5, 0.5}}, {{0.2, 0.6}, {0.9, 0.6}}};
  for (const auto& p : pairs) {
    cplx direct = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j)
      direct += q.w[j] * ctx.density(j) * heat_multiplier(X, q.x[j], 2.0 * t) *
                boundary_pairing(X, cplx(0, q.x[j]), p[0], std::conj(p[1]));
    direct *= X.k_space;
    two = std::max(two, std::abs(reproducing_kernel_Kt(ctx, p[0], p[1], t) - direct) / std::abs(direct));
  }
  const double xs[6] = {0.0, 0.3, 0.7, 1.1, 1.6, 2.4};
  Eigen::MatrixXcd G(6, 6), Gt(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      G(i, j) = reproducing_kernel_K(ctx, xs[i], xs[j]);
      Gt(i, j) = reproducing_kernel_Kt(ctx, xs[i], xs[j], t);
    }
  const double gmin = std::min(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(G).eigenvalues().minCoeff(),
                               Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(Gt).eigenvalues().minCoeff());
  r.metrics = {{"restriction_err", restr},     {"cr_residual", cr},   {"point_eval_ratio", bound},
               {"reproducing_err_K", repK},    {"reproducing_err_Kt", repKt},
               {"kt_two_representations_err", two}, {"gram_min_eigenvalue", gmin}};
  r.pass = restr <= 1e-6 && cr <= 1e-6 && bound <= 1.0 && repK <= r.tolerance && repKt <= r.tolerance &&
           two <= 1e-5 && gmin >= -1e-10;
}

void hxi_unitarity(Run& run) {
  const SpaceModel& X = run.X;
  auto& r = run.r;
  r.tolerance = run.tol(1e-4);
  const TransformContext ctx(X, grid_from(run.cfg, 2.5, 80.0));
  const LineGrid lg = line_grid_for(X);
  const std::vector<double> ys = omega_y_grid(X);
  r.table.header = {"spectrum", "y", "slice_norm", "extrapolated"};
  double ne = 0.0, w = 0.0;
  bool monotone = true;
  const auto fs = bumps();
  for (std::size_t b = 0; b < fs.size(); ++b) {
    const SpectralFunction F = heat_multiply(ctx, spherical_transform(ctx, sample_real(ctx, fs[b])), 0.5);
    const HorocycleDomainFunction u = lambda_tilde(ctx, F, lg, ys);
    const HxiNorm n = hxi_norm(X, u);
    const double hx = hx_norm(ctx, F);
    ne = std::max(ne, std::abs(n.value - hx) / hx);
    w = std::max(w, w_relation_residual(ctx, u.slice(0)));
    monotone = monotone && n.monotone;
    for (std::size_t i = 0; i < ys.size(); ++i) r.table.rows.push_back({double(b), ys[i], n.slice_norms[i], 0.0});
    r.table.rows.push_back({double(b), X.omega_bound, n.value, 1.0});
  }
  const SpectralFunction F = heat_multiply(ctx, spherical_transform(ctx, sample_real(ctx, fs[2])), 0.5);
  const std::vector<double> conv = lambda_tilde_convergence(ctx, F, lg, {0.0, 0.5 * X.omega_bound, 0.95 * X.omega_bound},
                                                            {0.1, 0.01, 0.001});
  const bool decay = conv[0] > conv[1] && conv[1] > conv[2];
  r.metrics = {{"norm_equality_err", ne},    {"w_residual", w},          {"slices_monotone", monotone ? 1.0 : 0.0},
               {"limit_err_t0.1", conv[0]}, {"limit_err_t0.01", conv[1]}, {"limit_err_t0.001", conv[2]}};
  r.pass = ne <= r.tolerance && w <= 1e-8 && decay;
}

void helgason_roundtrip(Run& run) {
  auto& r = run.r;
  r.tolerance = run.tol(1e-4);
  if (!(run.X.m1 == 1.0 && run.X.m2 == 0.0)) throw DomainError("helgason-roundtrip: defined on hyperbolic(2)");
  const HelgasonContext ctx(run.X, grid_from(run.cfg, 2.5, 40.0), run.cfg.modes);
  const int n_angles = std::max(12, 2 * run.cfg.modes + 4);
  auto hb = [](double t) { return bump(t, 4.0, 0.2, 2.4); };
  const DiskFunction f = sample_disk(ctx.radial(), n_angles, [&](double t, double th) {
    return hb(t) * (1.0 + 0.5 * std::cos(th) + 0.3 * std::sin(2 * th) + cplx(0.0, 0.2) * std::cos(3 * th));
  });
  const HelgasonSpectrum F = helgason_transform(ctx, f);
  const DiskFunction g = helgason_inverse(ctx, F, n_angles);
  const double e = rel_diff(g.values, f.values), trunc = mode_truncation_error(F);
  r.table.header = {"t", "theta", "f_re", "f_im", "roundtrip_re", "roundtrip_im"};
  for (std::size_t i = 0; i < ctx.radial()->size(); i += 16)
    for (int a = 0; a < n_angles; ++a) {
      const cplx x = f.at_node(i, a), y = g.at_node(i, a);
      r.table.rows.push_back({ctx.radial()->rule.x[i], 2.0 * kPi * a / n_angles, x.real(), x.imag(), y.real(), y.imag()});
    }
  r.metrics = {{"roundtrip_err", e}, {"mode_truncation", trunc}};
  r.pass = e <= r.tolerance;
}

struct Entry {
  ExperimentInfo info;
  std::function<void(Run&)> fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {{"cfun-validate", "c-function as the connection coefficient between the ODE solution and the series at infinity"},
       cfun_validate},
      {{"spherical-validate", "phi_rank_one vs the boundary integral on a 10x10 grid, Weyl symmetry, Laplacian residual"},
       spherical_validate},
      {{"plancherel-roundtrip", "spherical transform round trip and Plancherel identity on three bumps"},
       plancherel_roundtrip},
      {{"heat-kernel-table", "heat kernel table with unit mass, monotonicity and the H^3 closed form"}, heat_kernel_table},
      {{"heat-semigroup", "semigroup law and strong continuity of the heat transform"}, heat_semigroup},
      {{"convexity-sample", "convexity theorem on random (g, Y) samples with a sharpness probe"}, convexity_sample_exp},
      {{"abel-gaussian", "R_rho of the heat kernel is the Euclidean Gaussian on A; literal Lambda h_t claim reported"},
       abel_gaussian},
      {{"lambda-unitarity", "Lambda unitarity, W-relation and inversion on three bumps"}, lambda_unitarity},
      {{"fock-unitarity", "heat image norm, Fock norm and Segal-Bargmann inversion on three bumps"}, fock_unitarity},
      {{"hx-kernel", "crown extension, point evaluation, reproducing kernels K and K_t, Gram positivity"}, hx_kernel},
      {{"hxi-unitarity", "H_Xi norm of Lambda~ against the H_X norm, W-relation, t -> 0 limit"}, hxi_unitarity},
      {{"helgason-roundtrip", "non-radial Helgason transform round trip on hyperbolic(2)"}, helgason_roundtrip},
  };
  return r;
}

}  // namespace

const std::vector<ExperimentInfo>& list_experiments() {
  static const std::vector<ExperimentInfo> names = [] {
    std::vector<ExperimentInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return names;
}

Report run_experiment(const ExperimentConfig& cfg, const std::string& name) {
  validate(cfg);
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const Entry& e) { return e.info.name == name; });
  if (it == reg.end()) {
    std::string msg = "unknown experiment '" + name + "'; valid names:";
    for (const auto& e : reg) msg += " " + e.info.name;
    throw ConfigError(msg);
  }
  Report r;
  r.experiment = name;
  r.space = cfg.space;
  Run run{cfg, build_space(cfg.space), r};
  const auto start = std::chrono::steady_clock::now();
  try {
    it->fn(run);
  } catch (const Error& e) {
    throw Error(name + " on " + cfg.space + ": " + e.what());
  }
  r.runtime_ms = long(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return r;
}

std::string summary_json(const Report& r, bool with_runtime) {
  nlohmann::ordered_json j;
  j["experiment"] = r.experiment;
  j["space"] = r.space;
  nlohmann::json m = nlohmann::json::object();
  for (const auto& [k, v] : r.metrics) m[k] = v;
  j["metrics"] = m;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  if (with_runtime) j["runtime_ms"] = r.runtime_ms;
  return j.dump(2) + "\n";
}

void write_report(const Report& r, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_csv(out_dir + "/" + r.experiment + ".csv", r.table);
  std::ofstream f(out_dir + "/" + r.experiment + ".json", std::ios::binary);
  if (!f) throw ConfigError("write_report: cannot write to " + out_dir);
  f << summary_json(r);
}

}  // namespace symspace
