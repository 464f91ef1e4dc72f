#include <cmath>
#include <numbers>

#include "bumps.hpp"
#include "doctest.h"
#include "symspace/cfunction.hpp"
#include "symspace/error.hpp"
#include "symspace/quadrature.hpp"
#include "symspace/spherical.hpp"
#include "symspace/transform.hpp"

using namespace symspace;
using namespace testfn;

namespace {

constexpr double kPi = std::numbers::pi;

const TransformContext& bump_ctx(int which) {
  static const TransformContext h2(hyperbolic(2), bump_grid());
  static const TransformContext h3(hyperbolic(3), bump_grid());
  return which == 2 ? h2 : h3;
}

GridOptions heat_grid() {
  GridOptions o;
  o.t_max = 12.0;
  o.nu_max = 30.0;
  return o;
}

const TransformContext& heat_ctx(int which) {
  static const TransformContext h2(hyperbolic(2), heat_grid());
  static const TransformContext h3(hyperbolic(3), heat_grid());
  return which == 2 ? h2 : h3;
}

}  // namespace

TEST_CASE("zero in, zero out") {
  const auto& ctx = bump_ctx(2);
  const RadialFunction f = sample(ctx, [](double) { return 0.0; });
  const SpectralFunction F = spherical_transform(ctx, f);
  CHECK(max_abs(F.values) == 0.0);
  CHECK(max_abs(spherical_inverse(ctx, F).values) == 0.0);
  CHECK(image_norm_t(ctx, F, 0.5) == 0.0);
}

TEST_CASE("radial round trip and Plancherel on H2 and H3") {
  for (int which : {2, 3}) {
    const auto& ctx = bump_ctx(which);
    for (const auto& b : radial_bumps()) {
      const RadialFunction f = sample(ctx, b);
      const SpectralFunction F = spherical_transform(ctx, f);
      const RadialFunction g = spherical_inverse(ctx, F);
      CHECK(max_diff(f.values, g.values) / max_abs(f.values) <= 1e-6);
      const double n2 = l2_norm_sq(ctx, f);
      CHECK(std::abs(spectral_norm_sq(ctx, F) / n2 - 1.0) <= 1e-6);
      // Heat image norm reproduces the L2 norm.
      CHECK(std::abs(image_norm_t(ctx, heat_multiply(ctx, F, 0.1), 0.1) / n2 - 1.0) <= 1e-6);
    }
  }
}

TEST_CASE("transform is even in nu and linear") {
  const auto& ctx = bump_ctx(2);
  const auto bs = radial_bumps();
  const RadialFunction f = sample(ctx, bs[0]);
  const SpectralFunction F = spherical_transform(ctx, f);
  const auto& r = ctx.radial()->rule;
  for (std::size_t j : {std::size_t(3), std::size_t(200), std::size_t(900)}) {
    const double nu = ctx.spectral()->rule.x[j];
    cplx minus = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i)
      minus += r.w[i] * ctx.delta(i) * f.values[i] * phi_rank_one(ctx.space(), cplx(0.0, -nu), r.x[i]);
    CHECK(std::abs(minus - F.values[j]) <= 1e-10 * max_abs(F.values));
  }
  const RadialFunction g = sample(ctx, bs[2]);
  RadialFunction h = f;
  for (std::size_t i = 0; i < h.values.size(); ++i) h.values[i] = 2.0 * f.values[i] - 3.0 * g.values[i];
  const SpectralFunction G = spherical_transform(ctx, g), H = spherical_transform(ctx, h);
  double err = 0.0;
  for (std::size_t j = 0; j < H.values.size(); ++j)
    err = std::max(err, std::abs(H.values[j] - 2.0 * F.values[j] + 3.0 * G.values[j]));
  CHECK(err <= 1e-13 * max_abs(H.values));
}

TEST_CASE("round trip error decreases under spectral refinement") {
  double prev = 1.0;
  for (double nu_max : {30.0, 50.0, 70.0}) {
    GridOptions o = bump_grid();
    o.nu_max = nu_max;
    const TransformContext ctx(hyperbolic(2), o);
    const RadialFunction f = sample(ctx, radial_bumps()[0]);
    const RadialFunction g = spherical_inverse(ctx, spherical_transform(ctx, f), 1.0);
    const double err = max_diff(f.values, g.values) / max_abs(f.values);
    CHECK(err < prev / 4.0);
    prev = err;
  }
}

TEST_CASE("calibration recovers the analytic inversion constant") {
  for (const SpaceModel& X : {hyperbolic(2), hyperbolic(3), jacobi(3, 2)}) {
    const CalibrationRecord a = calibrate_constants(X), b = calibrate_constants(X);
    CHECK(a.k_space > 0.0);
    CHECK(a.k_space == b.k_space);
    CHECK(std::abs(a.k_space / a.k_analytic - 1.0) <= 1e-9);
    CHECK(std::abs(X.k_space / a.k_analytic - 1.0) <= 1e-14);
    CHECK(a.residual <= 1e-9);
  }
}

TEST_CASE("errors: bad heat time and spectral truncation") {
  const SpaceModel X = hyperbolic(2);
  CHECK_THROWS_AS(heat_kernel(X, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(heat_kernel(X, -1.0, 1.0), DomainError);
  const auto& ctx = bump_ctx(2);
  const SpectralFunction F = sample_spectrum(ctx, [](double nu) { return 1.0 / (1.0 + nu); });
  CHECK_THROWS_AS(spherical_inverse(ctx, F), ConvergenceError);
  const RadialFunction f = sample(ctx, [](double t) { return std::exp(-t); });
  CHECK_THROWS_AS(spherical_transform(ctx, f), ConvergenceError);
}

TEST_CASE("H3 closed-form heat kernel against the spectral quadrature") {
  const SpaceModel X = hyperbolic(3);
  for (double t : {0.1, 1.0})
    for (double r : {0.5, 2.0, 5.0}) {
      const double q = heat_kernel(X, t, r), c = heat_kernel_h3_closed(X, t, r);
      CHECK(std::abs(q / c - 1.0) <= 1e-8);
    }
}

TEST_CASE("heat kernel: shifted contour agrees with the direct integral where both apply") {
  for (const SpaceModel& X : {hyperbolic(2), jacobi(3, 2)}) {
    // r^2/4t just above the switch: evaluate a nearby pair both ways via the vector API.
    const double t = 0.5;
    for (double r : {2.05, 3.0}) {
      const double shifted = heat_kernel(X, t, r);
      // Direct integral with phi on a fine nu grid.
      const Rule q = panels(0.0, 14.0, 0.25, 20);
      double direct = 0.0;
      for (std::size_t j = 0; j < q.size(); ++j)
        direct += q.w[j] * heat_multiplier(X, q.x[j], t) * plancherel_density(X, q.x[j]) *
                  phi_rank_one(X, cplx(0.0, q.x[j]), r).real();
      direct *= X.k_space;
      CHECK(std::abs(shifted / direct - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("heat kernel is positive, decreasing in r, and has unit mass") {
  for (const SpaceModel& X : {hyperbolic(2), hyperbolic(3), jacobi(3, 2)}) {
    for (double t : {0.1, 1.0}) {
      const Rule q = panels(0.0, 14.0 + 12.0 * std::sqrt(t), 0.25, 16);
      const auto h = heat_kernel(X, t, q.x);
      double mass = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (h[i] > 1e-290) {
          CHECK(h[i] > 0.0);
          if (i > 0) CHECK(h[i] < h[i - 1]);
        }
        mass += q.w[i] * X.density(q.x[i]) * h[i];
      }
      CHECK(std::abs(mass - 1.0) <= 1e-6);
    }
  }
}

TEST_CASE("transform of the heat kernel is the heat multiplier") {
  for (int which : {2, 3}) {
    const auto& ctx = heat_ctx(which);
    const double t = 0.5;
    const auto h = heat_kernel(ctx.space(), t, ctx.radial()->rule.x);
    RadialFunction f{ctx.radial(), std::vector<cplx>(h.begin(), h.end())};
    const SpectralFunction F = spherical_transform(ctx, f);
    double err = 0.0;
    for (std::size_t j = 0; j < F.values.size(); ++j)
      err = std::max(err, std::abs(F.values[j] - heat_multiplier(ctx.space(), F.grid->rule.x[j], t)));
    CHECK(err <= 1e-7);
  }
}

TEST_CASE("heat semigroup and strong continuity") {
  for (int which : {2, 3}) {
    const auto& ctx = heat_ctx(which);
    const RadialFunction f = sample(ctx, [](double t) { return std::exp(-2.0 * t * t); });
    const RadialFunction a = heat_transform(ctx, heat_transform(ctx, f, 0.2), 0.3);
    const RadialFunction b = heat_transform(ctx, f, 0.5);
    CHECK(max_diff(a.values, b.values) / max_abs(b.values) <= 1e-8);
    double prev = 1e300;
    for (double t : {1e-1, 1e-2, 1e-3, 1e-4}) {
      RadialFunction d = heat_transform(ctx, f, t);
      for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= f.values[i];
      const double e = std::sqrt(l2_norm_sq(ctx, d) / l2_norm_sq(ctx, f));
      CHECK(e < prev);
      prev = e;
    }
    CHECK(prev <= 1e-3);
  }
}

TEST_CASE("heat equation residual by finite differences") {
  for (int which : {2, 3}) {
    const auto& ctx = heat_ctx(which);
    const SpaceModel& X = ctx.space();
    const RadialFunction f = sample(ctx, [](double t) { return std::exp(-2.0 * t * t); });
    const SpectralFunction F = spherical_transform(ctx, f);
    auto u = [&](double t, double r) { return spherical_inverse_at(ctx, heat_multiply(ctx, F, t), r).real(); };
    const double t = 0.3, dt = 1e-3, h = 1e-2;
    for (double r : {0.5, 1.0, 2.0}) {
      const double ut = (-u(t + 2 * dt, r) + 8 * u(t + dt, r) - 8 * u(t - dt, r) + u(t - 2 * dt, r)) / (12 * dt);
      const double u0 = u(t, r), up = u(t, r + h), um = u(t, r - h), up2 = u(t, r + 2 * h), um2 = u(t, r - 2 * h);
      const double d1 = (-up2 + 8 * up - 8 * um + um2) / (12 * h);
      const double d2 = (-up2 + 16 * up - 30 * u0 + 16 * um - um2) / (12 * h * h);
      const double L = d2 + X.drift(r) * d1;
      CHECK(std::abs(ut - L) <= 1e-4 * std::abs(ut));
    }
  }
}

TEST_CASE("heat image norm is monotone in t") {
  const auto& ctx = heat_ctx(2);
  const SpectralFunction F =
      sample_spectrum(ctx, [](double nu) { return std::exp(-nu * nu); });
  double prev = 0.0;
  for (double t : {0.0, 0.1, 0.2, 0.3}) {
    const double v = image_norm_t(ctx, F, t);
    CHECK(v > prev);
    prev = v;
  }
}

// ---- Helgason ----

namespace {

GridOptions helgason_grid() {
  GridOptions o;
  o.t_max = 2.5;
  o.nu_max = 40.0;
  return o;
}

const HelgasonContext& hctx() {
  static const HelgasonContext c(hyperbolic(2), helgason_grid(), 4);
  return c;
}

double hb(double t) { return bump(t, 4.0, 0.2, 2.4); }

cplx nonradial(double t, double th) {
  return hb(t) * (1.0 + 0.5 * std::cos(th) + 0.3 * std::sin(2 * th) + cplx(0.0, 0.2) * std::cos(3 * th));
}

}  // namespace

TEST_CASE("circle mode table agrees with the boundary trapezoid") {
  const SpaceModel X = hyperbolic(2);
  const std::vector<double> ts{0.1, 0.7, 1.5, 2.4, 4.0};
  for (cplx l : {cplx(0.0, 0.5), cplx(0.0, 7.0), cplx(0.3, 2.0)})
    for (int n : {0, 1, 3, 6}) {
      const auto tab = circle_mode_table(X, l, n, ts);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        const cplx ref = circle_mode_kernel(X, l, n, ts[i]);
        const double scale = circle_mode_kernel(X, cplx(l.real(), 0.0), 0, ts[i]).real();
        CHECK(std::abs(tab[i] - ref) <= 1e-10 * scale);
      }
    }
  CHECK(circle_mode_kernel(X, cplx(0.0, 2.0), 3, 0.0) == cplx(0.0));
  CHECK(circle_mode_kernel(X, cplx(0.0, 2.0), 0, 0.0) == cplx(1.0));
  CHECK(std::abs(circle_mode_kernel(X, cplx(0.0, 2.0), 0, 1.3) - phi_rank_one(X, cplx(0.0, 2.0), 1.3)) <= 1e-12);
}

TEST_CASE("Helgason round trip on a non-radial bump") {
  const auto& ctx = hctx();
  const DiskFunction f = sample_disk(ctx.radial(), 12, nonradial);
  const HelgasonSpectrum F = helgason_transform(ctx, f);
  CHECK(mode_truncation_error(F) <= 1e-12);
  const DiskFunction g = helgason_inverse(ctx, F, 12);
  CHECK(max_diff(f.values, g.values) / max_abs(f.values) <= 1e-4);
}

TEST_CASE("Helgason transform of a radial function reduces to the spherical transform") {
  const auto& ctx = hctx();
  const TransformContext sctx(hyperbolic(2), helgason_grid());
  const DiskFunction f = sample_disk(ctx.radial(), 12, [](double t, double) { return hb(t); });
  const HelgasonSpectrum F = helgason_transform(ctx, f);
  const SpectralFunction S = spherical_transform(sctx, sample(sctx, hb));
  const double scale = max_abs(S.values);
  for (std::size_t j = 0; j < S.values.size(); ++j) {
    CHECK(std::abs(F.at(0, j) - S.values[j]) <= 1e-8 * scale);
    for (int n : {-2, 1, 3}) CHECK(std::abs(F.at(n, j)) <= 1e-12 * scale);
  }
  const DiskFunction g = helgason_inverse(ctx, F, 12);
  const RadialFunction s = spherical_inverse(sctx, S, 1.0);
  double err = 0.0;
  for (std::size_t i = 0; i < s.values.size(); ++i)
    for (int a = 0; a < 12; ++a) err = std::max(err, std::abs(g.at_node(i, a) - s.values[i]));
  CHECK(err <= 1e-8 * max_abs(s.values));
}

TEST_CASE("Helgason: e^{i theta} input is dominated by mode 1; rotation multiplies modes by phases") {
  const auto& ctx = hctx();
  const DiskFunction f =
      sample_disk(ctx.radial(), 12, [](double t, double th) { return hb(t) * std::exp(cplx(0.0, th)); });
  const HelgasonSpectrum F = helgason_transform(ctx, f);
  double m1 = 0.0, other = 0.0;
  for (int n = -4; n <= 4; ++n)
    for (std::size_t j = 0; j < F.grid->size(); ++j) (n == 1 ? m1 : other) = std::max(n == 1 ? m1 : other, std::abs(F.at(n, j)));
  CHECK(other <= 1e-12 * m1);

  const double beta = 2.0 * kPi * 3.0 / 12.0;
  const DiskFunction g = sample_disk(ctx.radial(), 12, nonradial);
  const DiskFunction gr = sample_disk(ctx.radial(), 12, [&](double t, double th) { return nonradial(t, th - beta); });
  const HelgasonSpectrum G = helgason_transform(ctx, g), Gr = helgason_transform(ctx, gr);
  double err = 0.0;
  for (int n = -4; n <= 4; ++n)
    for (std::size_t j = 0; j < G.grid->size(); ++j)
      err = std::max(err, std::abs(Gr.at(n, j) - std::exp(cplx(0.0, -n * beta)) * G.at(n, j)));
  CHECK(err <= 1e-10 * max_abs(G.values));
}

TEST_CASE("boundary integrals at lambda and -lambda agree") {
  const auto& ctx = hctx();
  const DiskFunction f = sample_disk(ctx.radial(), 12, nonradial);
  const HelgasonSpectrum F = helgason_transform(ctx, f), Fr = helgason_transform(ctx, f, true);
  struct P {
    std::size_t j, i;
    double th;
  };
  const P pts[] = {{10, 5, 0.1}, {100, 40, 1.0}, {300, 80, 2.0}, {500, 120, 3.0}, {700, 150, 4.0},
                   {50, 20, 5.0}, {250, 60, 0.7}, {400, 100, 1.7}, {600, 140, 2.9}, {900, 30, 5.9}};
  for (const P& p : pts) {
    cplx lhs = 0.0, rhs = 0.0, scale = 0.0;
    for (int n = -4; n <= 4; ++n) {
      const cplx e = ctx.E(n, p.j, p.i), ph = std::exp(cplx(0.0, n * p.th));
      lhs += ph * std::conj(e) * Fr.at(n, p.j);
      rhs += ph * e * F.at(n, p.j);
      scale += std::abs(e * F.at(n, p.j));
    }
    CHECK(std::abs(lhs - rhs) <= 1e-6 * std::abs(scale));
  }
}

TEST_CASE("intertwining scalars: trivial on mode 0, unitary, independent of the point") {
  const SpaceModel X = hyperbolic(2);
  for (double nu : {0.5, 1.5, 4.0}) {
    const cplx l(0.0, nu);
    CHECK(std::abs(intertwining_scalar(X, l, 0, 0.8) - 1.0) <= 1e-12);
    for (int n : {1, 2, 3}) {
      const cplx a = intertwining_scalar(X, l, n, 0.8), b = intertwining_scalar(X, l, n, 1.9);
      CHECK(std::abs(std::abs(a) - 1.0) <= 1e-8);
      CHECK(std::abs(a - b) <= 1e-8);
    }
  }
  // Off the unitary axis the scalar is still point independent.
  const cplx l(0.4, 1.0);
  CHECK(std::abs(intertwining_scalar(X, l, 2, 0.6) - intertwining_scalar(X, l, 2, 1.4)) <= 1e-8);
}
