#include "symspace/crown.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "symspace/cfunction.hpp"
#include "symspace/error.hpp"
#include "symspace/quadrature.hpp"
#include "symspace/spherical.hpp"

namespace symspace {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

Mat2c J_apply(const Eigen::Vector2cd& u1, const Eigen::Vector2cd& u2) {
  Mat2c k;
  k << u1(0), -u2(1), u1(1), u2(0);
  return k;
}

Mat2c a_matrix(cplx zeta) {
  Mat2c a = Mat2c::Zero();
  a(0, 0) = std::exp(0.5 * zeta);
  a(1, 1) = std::exp(-0.5 * zeta);
  return a;
}

}  // namespace

CrownModel crown_model(const SpaceModel& X) {
  if (X.m1 == 1.0 && X.m2 == 0.0) return CrownModel::SL2R;
  if (X.m1 == 2.0 && X.m2 == 0.0) return CrownModel::SL2C;
  throw DomainError("crown matrix model available for H^2 and H^3 only");
}

Mat2c exp_iyH1(double y) { return a_matrix(cplx(0.0, y)); }

ComplexIwasawaResult iwasawa_complex(const SpaceModel& X, const Mat2c& g, double y) {
  const CrownModel model = crown_model(X);
  if (model == CrownModel::SL2R && g.imag().cwiseAbs().maxCoeff() > 0.0)
    throw DomainError("iwasawa_complex: SL(2,R) model needs a real matrix");
  const Mat2c g2 = model == CrownModel::SL2R ? g : Mat2c(g.conjugate());
  // q(tau) = e^{i tau y} p11 + e^{-i tau y} p21 is the pairing of the first columns.
  const cplx p11 = g(0, 0) * g2(0, 0), p21 = g(1, 0) * g2(1, 0);
  auto q = [&](double tau) { return std::exp(I * (tau * y)) * p11 + std::exp(-I * (tau * y)) * p21; };
  const cplx q0 = q(0.0);
  if (!(q0.real() > 0.0)) throw PathError("iwasawa_complex: starting point is not in the real group");
  double tau = 0.0, dtau = 0.125, arg = 0.0;
  cplx cur = q0;
  while (tau < 1.0) {
    const double step = std::min(dtau, 1.0 - tau);
    const cplx next = q(tau + step);
    if (std::abs(next) <= 1e-12 * (std::abs(p11) + std::abs(p21))) throw PathError("iwasawa_complex: A-component degenerates on the path");
    const double d = std::arg(next / cur);
    if (std::abs(d) >= kPi / 4.0) {
      dtau = 0.5 * step;
      if (dtau < 1e-12) throw PathError("iwasawa_complex: no continuous branch along the path");
      continue;
    }
    arg += d;
    tau += step;
    cur = next;
    dtau = std::min(0.125, 2.0 * step);
  }
  const cplx zeta(std::log(std::abs(cur)), arg);
  const Mat2c M1 = exp_iyH1(y) * g, M2 = exp_iyH1(y) * g2;
  const cplx inv = std::exp(-0.5 * zeta);
  const Eigen::Vector2cd u1 = inv * M1.col(0), u2 = inv * M2.col(0);
  ComplexIwasawaResult r;
  r.a_exponent = zeta;
  r.k1 = J_apply(u1, u2);
  r.k2 = J_apply(u2, u1);
  const Mat2c ainv = a_matrix(-zeta);
  r.n1 = ainv * r.k1.inverse() * M1;
  r.n2 = ainv * r.k2.inverse() * M2;
  return r;
}

ConvexityResult convexity_check(const SpaceModel& X, const Mat2c& g, double Y, double slack) {
  if (!in_omega(X.rs, Eigen::VectorXd::Constant(1, Y))) throw DomainError("convexity_check: Y outside Omega");
  const ComplexIwasawaResult r = iwasawa_complex(X, g, Y);
  ConvexityResult out;
  out.Z = r.a_exponent.imag();
  out.ok = in_conv_weyl_orbit(X.rs, X.wg, Eigen::VectorXd::Constant(1, out.Z), Eigen::VectorXd::Constant(1, Y), slack);
  return out;
}

ConvexitySampleStats convexity_sample(const SpaceModel& X, std::uint64_t seed, std::size_t n, bool enriched) {
  const CrownModel model = crown_model(X);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  ConvexitySampleStats st;
  for (std::size_t i = 0; i < n; ++i) {
    Mat2c k, a = Mat2c::Zero(), nn = Mat2c::Identity();
    if (model == CrownModel::SL2R) {
      const double th = kPi * U(rng);
      k << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
      nn(0, 1) = 3.0 * U(rng);
    } else {
      // Haar-like SU(2) element from a random unit quaternion.
      Eigen::Vector4d v(U(rng), U(rng), U(rng), U(rng));
      if (v.norm() < 1e-3) v = Eigen::Vector4d(1, 0, 0, 0);
      v.normalize();
      const cplx al(v(0), v(1)), be(v(2), v(3));
      k << al, -std::conj(be), be, std::conj(al);
      nn(0, 1) = cplx(3.0 * U(rng), 3.0 * U(rng));
    }
    if (enriched) {
      // k close to the identity leaves g21 small.
      const double eps = std::pow(10.0, -1.0 - 5.0 * (0.5 + 0.5 * U(rng)));
      Mat2c kk;
      kk << std::cos(eps), -std::sin(eps), std::sin(eps), std::cos(eps);
      k = kk;
    }
    const double r = 3.0 * U(rng);
    a(0, 0) = std::exp(0.5 * r);
    a(1, 1) = std::exp(-0.5 * r);
    const double Y = X.omega_bound * 0.999 * U(rng);
    if (Y == 0.0) continue;
    const Mat2c g = k * a * nn;
    const ConvexityResult c = convexity_check(X, g, Y);
    ++st.samples;
    if (!c.ok) ++st.violations;
    st.max_ratio = std::max(st.max_ratio, std::abs(c.Z) / std::abs(Y));
    st.max_excess = std::max(st.max_excess, std::abs(c.Z) - std::abs(Y));
  }
  return st;
}

cplx sigma_relative(const SpaceModel& X, cplx z, cplx w) {
  const cplx rel(z.real() - w.real(), z.imag() + w.imag());
  if (!(std::abs(rel.imag()) < 2.0 * X.omega_bound))
    throw DomainError("sigma_relative: relative coordinate outside the doubled crown strip");
  return rel;
}

namespace {

double log_omega(const SpaceModel& X, double nu) {
  // log cosh(2 nu b) without overflow
  const double x = 2.0 * std::abs(nu) * X.omega_bound;
  return x + std::log1p(std::exp(-2.0 * x)) - std::log(2.0);
}

template <class F>
cplx spectral_integral(const TransformContext& ctx, F integrand) {
  const auto& q = ctx.spectral()->rule;
  cplx s = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) s += q.w[j] * ctx.density(j) * integrand(j, q.x[j]);
  return ctx.space().k_space * s;
}

}  // namespace

double hx_norm(const TransformContext& ctx, const SpectralFunction& F) {
  SpectralFunction G = F;
  G.measure = SpectralMeasure::Omega;
  const double v = spectral_norm_sq(ctx, G);
  if (!std::isfinite(v)) throw ConvergenceError("hx_norm: divergent omega-weighted tail");
  return v;
}

cplx hx_inner(const TransformContext& ctx, const SpectralFunction& F, const SpectralFunction& G) {
  const SpaceModel& X = ctx.space();
  return spectral_integral(ctx, [&](std::size_t j, double nu) {
    return F.values[j] * std::conj(G.values[j]) * std::exp(log_omega(X, nu));
  });
}

double point_evaluation_constant(const TransformContext& ctx, cplx z) {
  const SpaceModel& X = ctx.space();
  return std::sqrt(spectral_integral(ctx, [&](std::size_t, double nu) {
                     return cplx(std::norm(phi_crown(X, cplx(0.0, nu), z)) * std::exp(-log_omega(X, nu)));
                   }).real());
}

cplx hx_extension(const TransformContext& ctx, const SpectralFunction& F, cplx z) {
  const SpaceModel& X = ctx.space();
  double c2 = 0.0;
  const cplx val = spectral_integral(ctx, [&](std::size_t j, double nu) {
    const cplx p = phi_crown(X, cplx(0.0, nu), z);
    c2 += ctx.spectral()->rule.w[j] * ctx.density(j) * std::norm(p) * std::exp(-log_omega(X, nu));
    return F.values[j] * p;
  });
  const double bound = std::sqrt(X.k_space * c2 * hx_norm(ctx, F));
  if (std::abs(val) > bound * (1.0 + 1e-8) + 1e-300)
    throw ConvergenceError("hx_extension: point-evaluation bound violated; spectrum under-resolved");
  return val;
}

cplx reproducing_kernel_K(const TransformContext& ctx, cplx z, cplx w) {
  const SpaceModel& X = ctx.space();
  const cplx rel = sigma_relative(X, z, w);
  return spectral_integral(ctx, [&](std::size_t, double nu) {
    return phi_continued(X, cplx(0.0, nu), rel) * std::exp(-log_omega(X, nu));
  });
}

cplx reproducing_kernel_K_averaged(const TransformContext& ctx, cplx z, cplx w) {
  const SpaceModel& X = ctx.space();
  return spectral_integral(ctx, [&](std::size_t, double nu) {
    const cplx l(0.0, nu);
    return phi_crown(X, l, z) * std::conj(phi_crown(X, l, w)) * std::exp(-log_omega(X, nu));
  });
}

SpectralFunction kernel_spectrum(const TransformContext& ctx, cplx w) {
  const SpaceModel& X = ctx.space();
  return sample_spectrum(ctx, [&](double nu) {
    return std::conj(phi_crown(X, cplx(0.0, nu), w)) * std::exp(-log_omega(X, nu));
  });
}

cplx boundary_pairing(const SpaceModel& X, cplx lambda, cplx z, cplx y, int nodes) {
  crown_model(X);
  const cplx xz = std::tanh(0.5 * z), xy = std::tanh(0.5 * y);
  auto e = [&](cplx l, cplx xi, double b1) {
    return std::exp((l + X.rho) * std::log((1.0 - xi * xi) / (1.0 - 2.0 * xi * b1 + xi * xi)));
  };
  cplx s = 0.0;
  if (X.m1 == 1.0) {
    // periodic trapezoid in the boundary angle
    for (int j = 0; j < nodes; ++j) {
      const double c = std::cos(2.0 * kPi * j / nodes);
      s += e(lambda, xz, c) * e(-lambda, xy, c);
    }
    return s / double(nodes);
  }
  // S^2: only b1 = cos(theta) enters, with density 1/2 on [-1, 1]
  const Rule r = panels(-1.0, 1.0, 0.25, 16);
  for (std::size_t j = 0; j < r.size(); ++j) s += 0.5 * r.w[j] * e(lambda, xz, r.x[j]) * e(-lambda, xy, r.x[j]);
  return s;
}

cplx reproducing_kernel_Kt(const TransformContext& ctx, cplx z, cplx w, double t) {
  if (!(t > 0.0)) throw DomainError("reproducing_kernel_Kt: t must be positive");
  const SpaceModel& X = ctx.space();
  const cplx rel = sigma_relative(X, z, w);
  return spectral_integral(ctx, [&](std::size_t, double nu) {
    return heat_multiplier(X, nu, 2.0 * t) * phi_continued(X, cplx(0.0, nu), rel);
  });
}

}  // namespace symspace
