#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "bumps.hpp"
#include "oracles.hpp"
#include "doctest.h"
#include "symspace/cfunction.hpp"
#include "symspace/crown.hpp"
#include "symspace/error.hpp"
#include "symspace/quadrature.hpp"
#include "symspace/spherical.hpp"

using namespace symspace;
using namespace testfn;

namespace {

constexpr double kPi = std::numbers::pi;

GridOptions crown_grid() {
  GridOptions o;
  o.t_max = 2.5;
  o.nu_max = 30.0;
  return o;
}

const TransformContext& ctx_for(int which) {
  static const TransformContext h2(hyperbolic(2), crown_grid());
  static const TransformContext h3(hyperbolic(3), crown_grid());
  return which == 2 ? h2 : h3;
}

SpectralFunction heat_image(const TransformContext& ctx, int which_bump, double t) {
  const auto f = radial_bumps()[which_bump];
  const RadialFunction fr = sample(ctx, [&](double r) { return cplx(f(r)); });
  return heat_multiply(ctx, spherical_transform(ctx, fr), t);
}

using oracle::boundary_pair;
using oracle::phi_oracle;

double omega(const SpaceModel& X, double nu) { return std::cosh(2.0 * nu * X.omega_bound); }

const cplx kPoints[5] = {{0.3, 0.2}, {0.8, -0.5}, {1.2, 0.7}, {0.0, 1.0}, {2.0, -0.3}};

}  // namespace

TEST_CASE("complex Iwasawa: real reduction and the trivial point") {
  const SpaceModel X = hyperbolic(2);
  Mat2c g;
  g << 2.0, 1.0, 3.0, 2.0;
  const ComplexIwasawaResult r = iwasawa_complex(X, g, 0.0);
  CHECK(r.a_exponent.imag() == 0.0);
  CHECK(std::abs(r.a_exponent.real() - std::log(4.0 + 9.0)) <= 1e-12);
  for (int w : {2, 3}) {
    const SpaceModel Y = hyperbolic(w);
    const ComplexIwasawaResult e = iwasawa_complex(Y, Mat2c::Identity(), 1.1);
    CHECK(std::abs(e.a_exponent - cplx(0.0, 1.1)) <= 1e-14);
    const ConvexityResult c = convexity_check(Y, Mat2c::Identity(), -0.7);
    CHECK(c.ok);
    CHECK(std::abs(c.Z + 0.7) <= 1e-14);
  }
}

TEST_CASE("complex Iwasawa: factors reproduce the matrix") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double worst = 0.0, worst_k = 0.0, worst_n = 0.0;
  for (int w : {2, 3}) {
    const SpaceModel X = hyperbolic(w);
    for (int i = 0; i < 1000; ++i) {
      Mat2c g;
      if (w == 2) {
        g << 1.0 + U(rng), U(rng), U(rng), 0.0;
        g(1, 1) = (1.0 + g(0, 1) * g(1, 0)) / g(0, 0);
      } else {
        g << cplx(1.0 + U(rng), U(rng)), cplx(U(rng), U(rng)), cplx(U(rng), U(rng)), 0.0;
        g(1, 1) = (1.0 + g(0, 1) * g(1, 0)) / g(0, 0);
      }
      const double y = 1.5 * U(rng);
      const ComplexIwasawaResult r = iwasawa_complex(X, g, y);
      Mat2c a = Mat2c::Zero();
      a(0, 0) = std::exp(0.5 * r.a_exponent);
      a(1, 1) = std::exp(-0.5 * r.a_exponent);
      const Mat2c M1 = exp_iyH1(y) * g;
      const Mat2c M2 = exp_iyH1(y) * (w == 2 ? g : Mat2c(g.conjugate()));
      worst = std::max({worst, (r.k1 * a * r.n1 - M1).norm() / M1.norm(), (r.k2 * a * r.n2 - M2).norm() / M2.norm()});
      worst_k = std::max(worst_k, (r.k1.transpose() * r.k2 - Mat2c::Identity()).norm());
      worst_n = std::max({worst_n, std::abs(r.n1(1, 0)), std::abs(r.n1(0, 0) - 1.0), std::abs(r.n1(1, 1) - 1.0)});
    }
  }
  CHECK(worst <= 1e-10);
  CHECK(worst_k <= 1e-10);
  CHECK(worst_n <= 1e-10);
}

TEST_CASE("complex Iwasawa: branch is tracked past the principal cut") {
  // On the identity the A-part is exp(iY); a fixed branch would wrap once |Y| > pi.
  const SpaceModel X = hyperbolic(3);
  const ComplexIwasawaResult r = iwasawa_complex(X, Mat2c::Identity(), 4.0);
  CHECK(std::abs(r.a_exponent - cplx(0.0, 4.0)) <= 1e-12);
  Mat2c g;
  g << 1.0, 0.0, 1.0, 1.0;  // q(tau) = 2 cos(tau y) vanishes at y = pi/2
  CHECK_THROWS_AS(iwasawa_complex(hyperbolic(2), g, kPi / 2.0), PathError);
  CHECK_THROWS_AS(convexity_check(hyperbolic(2), g, 2.0), DomainError);
  CHECK_THROWS_AS(iwasawa_complex(jacobi(3, 2), g, 0.1), DomainError);
}

TEST_CASE("convexity theorem on random samples") {
  for (int w : {2, 3}) {
    const SpaceModel X = hyperbolic(w);
    const ConvexitySampleStats st = convexity_sample(X, 1, 10000, false);
    CHECK(st.samples >= 9990);
    CHECK(st.violations == 0);
    CHECK(st.max_excess <= 1e-9);
    const ConvexitySampleStats sharp = convexity_sample(X, 2, 2000, true);
    CHECK(sharp.violations == 0);
    CHECK(sharp.max_ratio >= 0.99);
  }
}

TEST_CASE("sigma_relative") {
  const SpaceModel X = hyperbolic(2);
  CHECK(std::abs(sigma_relative(X, {0.7, 0.3}, 0.2) - cplx(0.5, 0.3)) <= 1e-15);
  CHECK(sigma_relative(X, 0.4, 0.4) == cplx(0.0));
  CHECK_THROWS_AS(sigma_relative(X, {0.0, 1.6}, {0.0, 1.6}), DomainError);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const cplx z(2.0 * U(rng), 0.7 * U(rng)), w(2.0 * U(rng), 0.7 * U(rng));
    // sigma is entrywise conjugation on SL(2,C); exp(w H1) is diagonal.
    const Mat2c az = exp_iyH1(0.0) * Eigen::DiagonalMatrix<cplx, 2>(std::exp(0.5 * z), std::exp(-0.5 * z)).toDenseMatrix();
    const Mat2c aw = Eigen::DiagonalMatrix<cplx, 2>(std::exp(0.5 * w), std::exp(-0.5 * w)).toDenseMatrix();
    const Mat2c rel = aw.conjugate().inverse() * az;
    worst = std::max(worst, std::abs(2.0 * std::log(rel(0, 0)) - sigma_relative(X, z, w)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("hx_norm") {
  const auto& ctx = ctx_for(2);
  const SpaceModel& X = ctx.space();
  SpectralFunction zero = sample_spectrum(ctx, [](double) { return cplx(0.0); });
  CHECK(hx_norm(ctx, zero) == 0.0);
  const double t = 1.5;
  for (double nu : ctx.spectral()->rule.x) REQUIRE(omega(X, nu) <= std::exp(2.0 * t * (nu * nu + X.rho * X.rho)));
  for (int b = 0; b < 3; ++b) {
    const auto f = radial_bumps()[b];
    const RadialFunction fr = sample(ctx, [&](double r) { return cplx(f(r)); });
    const SpectralFunction F = heat_multiply(ctx, spherical_transform(ctx, fr), t);
    const double h = hx_norm(ctx, F);
    CHECK(std::isfinite(h));
    CHECK(h <= l2_norm_sq(ctx, fr));
    CHECK(spectral_norm_sq(ctx, F) <= h);
    // Against an independent weighted sum.
    double ref = 0.0;
    for (std::size_t j = 0; j < F.values.size(); ++j)
      ref += ctx.spectral()->rule.w[j] * ctx.density(j) * std::norm(F.values[j]) * omega(X, ctx.spectral()->rule.x[j]);
    CHECK(std::abs(h - X.k_space * ref) <= 1e-12 * h);
  }
}

TEST_CASE("hx_extension: restriction, holomorphy and point evaluation") {
  for (int w : {2, 3}) {
    const auto& ctx = ctx_for(w);
    for (int b = 0; b < 3; ++b) {
      const SpectralFunction F = heat_image(ctx, b, 1.0);
      for (double t : {0.0, 0.4, 1.3, 2.2})
        CHECK(std::abs(hx_extension(ctx, F, t) - spherical_inverse_at(ctx, F, t)) <= 1e-6 * max_abs(F.values));
      const double norm = std::sqrt(hx_norm(ctx, F));
      const double h = 1e-3;
      for (cplx z : kPoints) {
        const cplx fz = hx_extension(ctx, F, z);
        const cplx dx = (hx_extension(ctx, F, z + h) - hx_extension(ctx, F, z - h)) / (2.0 * h);
        const cplx dy = (hx_extension(ctx, F, z + cplx(0, h)) - hx_extension(ctx, F, z - cplx(0, h))) / (2.0 * h);
        CHECK(std::abs(dx + cplx(0, 1) * dy) <= 1e-6 * std::max(1.0, std::abs(dx)));
        CHECK(std::abs(fz) <= point_evaluation_constant(ctx, z) * norm);
      }
    }
  }
}

TEST_CASE("phi_crown matches the boundary integral at complex points") {
  for (int w : {2, 3}) {
    const SpaceModel X = hyperbolic(w);
    for (cplx z : kPoints)
      for (double nu : {0.0, 1.5, 6.0})
        CHECK(std::abs(phi_crown(X, cplx(0, nu), z) - phi_oracle(X, cplx(0, nu), z)) <=
              1e-9 * std::max(1.0, std::abs(phi_crown(X, cplx(0, nu), z))));
  }
}

TEST_CASE("reproducing kernel K") {
  for (int w : {2, 3}) {
    const auto& ctx = ctx_for(w);
    const SpaceModel& X = ctx.space();
    const SpectralFunction F = heat_image(ctx, 1, 1.0);
    for (cplx p : kPoints) {
      const SpectralFunction Kw = sample_spectrum(ctx, [&](double nu) {
        return std::conj(phi_oracle(X, cplx(0, nu), p)) / omega(X, nu);
      });
      const cplx lhs = hx_inner(ctx, F, Kw), rhs = hx_extension(ctx, F, p);
      CHECK(std::abs(lhs - rhs) <= 1e-4 * std::abs(rhs));
      const SpectralFunction Kl = kernel_spectrum(ctx, p);
      CHECK(max_diff(Kl.values, Kw.values) <= 1e-8 * max_abs(Kw.values));
    }
    const double xs[6] = {0.0, 0.3, 0.7, 1.1, 1.6, 2.4};
    Eigen::MatrixXcd G(6, 6), Ga(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        G(i, j) = reproducing_kernel_K(ctx, xs[i], xs[j]);
        Ga(i, j) = reproducing_kernel_K_averaged(ctx, xs[i], xs[j]);
      }
    CHECK((G - G.adjoint()).norm() <= 1e-10 * G.norm());
    CHECK((Ga - Ga.adjoint()).norm() <= 1e-10 * Ga.norm());
    CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(G).eigenvalues().minCoeff() >= -1e-10);
    CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(Ga).eigenvalues().minCoeff() >= -1e-10);
  }
}

TEST_CASE("relative-coordinate kernel equals the boundary product form") {
  const cplx pairs[3][2] = {{{0.4, 0.3}, {0.1, 0.2}}, {{1.0, -0.4}, {0.5, 0.5}}, {{0.2, 0.6}, {0.9, 0.6}}};
  for (int w : {2, 3}) {
    const SpaceModel X = hyperbolic(w);
    for (const auto& p : pairs)
      for (double nu : {0.0, 1.0, 4.0}) {
        const cplx lam(0, nu);
        const cplx a = phi_continued(X, lam, sigma_relative(X, p[0], p[1]));
        const cplx b = boundary_pair(X, lam, p[0], std::conj(p[1]));
        CHECK(std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(a)));
      }
  }
}

TEST_CASE("heat kernel K_t") {
  for (int w : {2, 3}) {
    const auto& ctx = ctx_for(w);
    const SpaceModel& X = ctx.space();
    const double t = 0.5;
    for (double x : {0.0, 0.9}) {
      const cplx d = reproducing_kernel_Kt(ctx, x, x, t);
      CHECK(std::abs(d.imag()) <= 1e-14 * d.real());
      CHECK(d.real() > 0.0);
      CHECK(std::abs(d.real() - heat_kernel(X, 2.0 * t, 0.0)) <= 1e-8 * d.real());
    }
    // Direct d mu_t representation through the boundary integral.
    const cplx pairs[3][2] = {{{0.4, 0.3}, {0.1, 0.2}}, {{1.0, -0.4}, {0.5, 0.5}}, {{0.2, 0.6}, {0.9, 0.6}}};
    const PanelGrid nus = make_panel_grid(0.0, 10.0, 0.5, 16);
    for (const auto& p : pairs) {
      cplx direct = 0.0;
      for (std::size_t j = 0; j < nus.size(); ++j) {
        const double nu = nus.rule.x[j];
        direct += nus.rule.w[j] * plancherel_density(X, nu) *
                  heat_multiplier(X, nu, 2.0 * t) * boundary_pair(X, cplx(0, nu), p[0], std::conj(p[1]));
      }
      direct *= X.k_space;
      const cplx kt = reproducing_kernel_Kt(ctx, p[0], p[1], t);
      CHECK(std::abs(kt - direct) <= 1e-5 * std::abs(direct));
    }
    // Reproducing property in the image of H_t.
    const SpectralFunction F = heat_image(ctx, 2, t);
    for (cplx p : kPoints) {
      const SpectralFunction Kw = sample_spectrum(ctx, [&](double nu) {
        return heat_multiplier(X, nu, 2.0 * t) * std::conj(phi_oracle(X, cplx(0, nu), p));
      });
      cplx lhs = 0.0;
      for (std::size_t j = 0; j < F.values.size(); ++j) {
        const double nu = ctx.spectral()->rule.x[j];
        if (heat_multiplier(X, nu, 2.0 * t) == 0.0) continue;
        lhs += ctx.spectral()->rule.w[j] * ctx.density(j) * F.values[j] * std::conj(Kw.values[j]) /
               heat_multiplier(X, nu, 2.0 * t);
      }
      lhs *= X.k_space;
      const cplx rhs = hx_extension(ctx, F, p);
      CHECK(std::abs(lhs - rhs) <= 1e-4 * std::abs(rhs));
    }
    Eigen::MatrixXcd G(6, 6);
    const double xs[6] = {0.0, 0.3, 0.7, 1.1, 1.6, 2.4};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) G(i, j) = reproducing_kernel_Kt(ctx, xs[i], xs[j], t);
    CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(G).eigenvalues().minCoeff() >= -1e-10);
  }
}

TEST_CASE("boundary pairing matches the quadrature oracle") {
  const cplx pairs[3][2] = {{{0.4, 0.3}, {0.1, 0.2}}, {{1.0, -0.4}, {0.5, 0.5}}, {{0.2, 0.6}, {0.9, -0.6}}};
  for (int w : {2, 3}) {
    const SpaceModel X = hyperbolic(w);
    for (const auto& p : pairs)
      for (double nu : {0.0, 1.0, 4.0}) {
        const cplx a = boundary_pairing(X, cplx(0, nu), p[0], p[1]);
        const cplx b = boundary_pair(X, cplx(0, nu), p[0], p[1]);
        CHECK(std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(b)));
      }
  }
}
