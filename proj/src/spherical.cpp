#include "symspace/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symspace/cfunction.hpp"
#include "symspace/error.hpp"
#include "symspace/ode.hpp"
#include "symspace/quadrature.hpp"

namespace symspace {

namespace {

constexpr double kPi = std::numbers::pi;

void require_ball(const SpaceModel& X) {
  if (X.m2 != 0.0) throw DomainError("ball model requires m_2alpha = 0");
}

// Start radius for ODE continuation: inside the series' fast region.
double series_radius(cplx lambda) {
  return std::min(0.45, 2.5 / std::max(1.0, std::abs(lambda)));
}

bool hc_usable(cplx lambda, double t) {
  if (t < 1.5 || std::abs(lambda) < 0.5) return false;
  if (std::abs(lambda.real()) > 0.25) return false;
  return true;
}

cplx sinhc(cplx x) {
  if (std::abs(x) < 1e-3) {
    const cplx x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

}  // namespace

BoundaryPoint BoundaryPoint::angle(double theta) {
  Eigen::VectorXd b(2);
  b << std::cos(theta), std::sin(theta);
  return {b};
}

BoundaryPoint BoundaryPoint::unit(const Eigen::VectorXd& v) {
  const double n = v.norm();
  if (!(n > 0.0)) throw DomainError("boundary point needs a nonzero vector");
  return {v / n};
}

Eigen::VectorXd ball_point(double t, const Eigen::VectorXd& u) {
  return std::tanh(0.5 * t) * u / u.norm();
}

double ball_distance(const Eigen::VectorXd& x) { return 2.0 * std::atanh(x.norm()); }

double busemann(const SpaceModel& X, const Eigen::VectorXd& x, const BoundaryPoint& b) {
  require_ball(X);
  if (x.size() != b.b.size()) throw DomainError("busemann: dimension mismatch");
  const double r2 = x.squaredNorm();
  if (!(r2 < 1.0)) throw DomainError("busemann: point on or outside the boundary");
  return std::log((1.0 - r2) / (x - b.b).squaredNorm());
}

cplx e_kernel(const SpaceModel& X, cplx lambda, const BoundaryPoint& b, const Eigen::VectorXd& x) {
  return std::exp((lambda + X.rho) * busemann(X, x, b));
}

cplx phi_series(const SpaceModel& X, cplx lambda, cplx z, cplx* derivative) {
  const cplx sh = std::sinh(z);
  const Hyp2f1 h = hyp2f1(0.5 * (X.rho + lambda), 0.5 * (X.rho - lambda), X.alpha_j + 1.0, -sh * sh);
  if (derivative) *derivative = -h.derivative * std::sinh(2.0 * z);
  return h.value;
}

cplx hc_Phi(const SpaceModel& X, cplx lambda, cplx z) {
  const cplx ch = std::cosh(z);
  const Hyp2f1 h = hyp2f1(0.5 * (X.rho - lambda), 0.5 * (X.alpha_j - X.beta_j + 1.0 - lambda),
                          1.0 - lambda, 1.0 / (ch * ch));
  return std::exp((lambda - X.rho) * std::log(2.0 * ch)) * h.value;
}

cplx phi_hc(const SpaceModel& X, cplx lambda, double t) {
  return c_rank_one(X, lambda) * hc_Phi(X, lambda, t) + c_rank_one(X, -lambda) * hc_Phi(X, -lambda, t);
}

std::vector<cplx> phi_rank_one_table(const SpaceModel& X, cplx lambda, const std::vector<double>& ts) {
  std::vector<cplx> out(ts.size());
  const double t0 = series_radius(lambda);
  std::vector<double> sig;
  std::size_t first_ode = ts.size();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0 && ts[i] < ts[i - 1]) throw DomainError("phi_rank_one_table: ts must be ascending");
    if (ts[i] < 0.0) throw DomainError("phi_rank_one_table: negative radius");
    if (ts[i] <= t0) {
      out[i] = ts[i] == 0.0 ? cplx(1.0) : phi_series(X, lambda, ts[i]);
    } else {
      if (first_ode == ts.size()) first_ode = i;
      sig.push_back(ts[i] - t0);
    }
  }
  if (sig.empty()) return out;
  // Repeated radii would stall the stepper; integrate over distinct values only.
  std::vector<double> uniq;
  std::vector<std::size_t> map(sig.size());
  for (std::size_t j = 0; j < sig.size(); ++j) {
    if (uniq.empty() || sig[j] > uniq.back()) uniq.push_back(sig[j]);
    map[j] = uniq.size() - 1;
  }
  cplx d0;
  const cplx p0 = phi_series(X, lambda, t0, &d0);
  const auto states = integrate_radial(X, lambda, t0, {p0, d0}, 1.0, uniq);
  for (std::size_t j = 0; j < sig.size(); ++j) out[first_ode + j] = states[map[j]][0];
  return out;
}

cplx phi_rank_one(const SpaceModel& X, cplx lambda, double t) {
  t = std::abs(t);
  if (t == 0.0) return 1.0;
  if (t <= series_radius(lambda)) return phi_series(X, lambda, t);
  if (hc_usable(lambda, t)) {
    try {
      return phi_hc(X, lambda, t);
    } catch (const SingularValueError&) {
      // integer lambda: fall through to the ODE route
    }
  }
  return phi_rank_one_table(X, lambda, {t})[0];
}

cplx phi_complex_group(cplx lambda, double t) { return sinhc(lambda * t) / sinhc(cplx(t)); }

double phi_complex_group(double nu, double t) {
  return phi_complex_group(cplx(0.0, nu), t).real();
}

cplx phi_continued(const SpaceModel& X, cplx lambda, cplx z) {
  if (!(std::abs(z.imag()) < 2.0 * X.omega_bound))
    throw DomainError("phi_continued: |Im z| outside the doubled crown strip");
  if (z.real() < 0.0) z = -z;  // even in z
  if (z.imag() == 0.0) return phi_rank_one(X, lambda, z.real());
  const double r = std::abs(z);
  const double r0 = series_radius(lambda);
  if (r <= r0) return phi_series(X, lambda, z);
  const cplx dir = z / r;
  const cplx z0 = r0 * dir;
  cplx d0;
  const cplx p0 = phi_series(X, lambda, z0, &d0);
  return integrate_radial(X, lambda, z0, {p0, d0}, dir, {r - r0})[0][0];
}

cplx phi_crown(const SpaceModel& X, cplx lambda, cplx z) {
  if (!in_omega(X.rs, Eigen::VectorXd::Constant(1, z.imag())))
    throw DomainError("phi_crown: imaginary part outside Omega");
  if (z.imag() == 0.0) return phi_rank_one(X, lambda, z.real());
  return phi_continued(X, lambda, z);
}

cplx phi_integral(const SpaceModel& X, cplx lambda, double t, const PhiIntegralOptions& opt) {
  t = std::abs(t);
  if (t == 0.0) return 1.0;
  const cplx p = -(lambda + X.rho);
  const double ch = std::cosh(t), sh = std::sinh(t);
  const int levels = int(std::ceil(t / std::log(2.0))) + 2;

  auto estimate = [&](auto&& evaluate) -> cplx {
    int n = 16;
    auto [prev, scale] = evaluate(n);
    for (int d = 0; d < opt.max_doublings; ++d) {
      n *= 2;
      auto [cur, sc] = evaluate(n);
      if (std::abs(cur - prev) <= opt.tol * std::max(sc, 1e-300)) return cur;
      prev = cur;
      scale = sc;
    }
    throw ConvergenceError("phi_integral: boundary quadrature resolution too low");
  };

  if (X.m2 == 0.0 && X.m1 == 1.0) {
    // Trapezoid on the circle, folded onto [0, pi] by the cos symmetry.
    return estimate([&](int n) {
      const int N = 8 * n;  // intervals on [0, pi]
      cplx s = 0.0;
      double a = 0.0;
      for (int j = 0; j <= N; ++j) {
        const double psi = kPi * j / N;
        const double w = (j == 0 || j == N) ? 0.5 : 1.0;
        const cplx g = std::exp(p * std::log(ch - sh * std::cos(psi)));
        s += w * g;
        a += w * std::abs(g);
      }
      return std::pair<cplx, double>{s / double(N), a / N};
    });
  }
  if (X.m2 == 0.0) {
    const double norm = std::sqrt(kPi) * std::exp(std::lgamma(0.5 * X.m1) - std::lgamma(0.5 * (X.m1 + 1.0)));
    return estimate([&](int n) {
      const Rule r = graded_toward_left(0.0, kPi, levels, n);
      cplx s = 0.0;
      double a = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        const double psi = r.x[i];
        const double w = r.w[i] * std::pow(std::sin(psi), X.m1 - 1.0);
        const cplx g = std::exp(p * std::log(ch - sh * std::cos(psi)));
        s += w * g;
        a += w * std::abs(g);
      }
      return std::pair<cplx, double>{s / norm, a / norm};
    });
  }
  // m2 > 0: two-variable reduction of the boundary integral over S^(m1+m2),
  // r = cos(theta'), psi measured from the minimum of |cosh t + r e^{i psi} sinh t|.
  const double a = X.alpha_j, b = X.beta_j;
  const double C = 2.0 * std::exp(std::lgamma(a + 1.0) - 0.5 * std::log(kPi) - std::lgamma(a - b) -
                                  std::lgamma(b + 0.5));
  return estimate([&](int n) {
    const Rule rt = graded_toward_left(0.0, 0.5 * kPi, levels, n);
    const Rule rp = graded_toward_left(0.0, kPi, levels, n);
    std::vector<double> cp(rp.size()), wp(rp.size());
    for (std::size_t j = 0; j < rp.size(); ++j) {
      cp[j] = std::cos(rp.x[j]);
      wp[j] = rp.w[j] * std::pow(std::sin(rp.x[j]), 2.0 * b);
    }
    cplx s = 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < rt.size(); ++i) {
      const double th = rt.x[i];
      const double r = std::cos(th);
      const double wt = rt.w[i] * std::pow(std::sin(th), X.m1 - 1.0) * std::pow(r, 2.0 * b + 1.0);
      for (std::size_t j = 0; j < rp.size(); ++j) {
        const double m2 = ch * ch - 2.0 * r * cp[j] * ch * sh + r * r * sh * sh;
        const cplx g = std::exp(0.5 * p * std::log(m2));
        s += wt * wp[j] * g;
        acc += wt * wp[j] * std::abs(g);
      }
    }
    return std::pair<cplx, double>{C * s, C * acc};
  });
}

cplx poisson_transform(const SpaceModel& X, cplx lambda, const BoundaryFunction& F,
                       const Eigen::VectorXd& x, double tol) {
  require_ball(X);
  if (X.n == 2) {
    cplx prev = 0.0;
    for (int N = 64; N <= (1 << 17); N *= 2) {
      cplx s = 0.0;
      double a = 0.0;
      for (int j = 0; j < N; ++j) {
        const BoundaryPoint b = BoundaryPoint::angle(2.0 * kPi * j / N);
        const cplx v = F(b) * e_kernel(X, lambda, b, x);
        s += v;
        a += std::abs(v);
      }
      s /= double(N);
      a /= N;
      if (N > 64 && std::abs(s - prev) <= tol * std::max(a, 1e-300)) return s;
      prev = s;
    }
    throw ConvergenceError("poisson_transform: circle quadrature did not converge");
  }
  if (X.n == 3) {
    cplx prev = 0.0;
    for (int n = 32; n <= 1024; n *= 2) {
      const Rule r = gauss_legendre(n);
      const int M = 2 * n;
      cplx s = 0.0;
      double a = 0.0;
      for (int i = 0; i < n; ++i) {
        const double u = r.x[i], st = std::sqrt(1.0 - u * u);
        for (int j = 0; j < M; ++j) {
          const double ph = 2.0 * kPi * j / M;
          Eigen::VectorXd bv(3);
          bv << st * std::cos(ph), st * std::sin(ph), u;
          const BoundaryPoint b{bv};
          const cplx v = F(b) * e_kernel(X, lambda, b, x) * (0.5 * r.w[i] / M);
          s += v;
          a += std::abs(v);
        }
      }
      if (n > 32 && std::abs(s - prev) <= tol * std::max(a, 1e-300)) return s;
      prev = s;
    }
    throw ConvergenceError("poisson_transform: sphere quadrature did not converge");
  }
  throw DomainError("poisson_transform: implemented for H^2 and H^3");
}

}  // namespace symspace
