#include "symspace/radon.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "symspace/cfunction.hpp"
#include "symspace/error.hpp"

namespace symspace {

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
double integrate_real(F f, double a, double b, double tol) {
  return integrate_doubling([&](double x) { return cplx(f(x)); }, a, b, tol).real();
}

}  // namespace

LineGrid make_line_grid(double s_max, double h) {
  if (!(h > 0.0) || !(s_max > 0.0)) throw ConfigError("make_line_grid: need s_max > 0 and h > 0");
  return LineGrid{h, int(std::ceil(s_max / h))};
}

double abel(const SpaceModel& X, const RadialFn& f, double t_support, double s, double tol) {
  const double chT = std::cosh(t_support), chs = std::cosh(s);
  if (chs >= chT) return 0.0;
  const double Y = std::sqrt(2.0 * (chT - chs));
  const double m1 = X.m1, m2 = X.m2;
  double val;
  if (m2 == 0.0) {
    val = integrate_real(
        [&](double y) {
          const double ct = chs + 0.5 * y * y;
          return f(std::acosh(ct)) * std::pow(y, m1 - 1.0);
        },
        0.0, Y, tol);
    val *= sphere_area(m1 - 1.0);
  } else {
    // u = cosh s + y^2/2, w = u^2 + v^2, then swap: int f(acosh sqrt w) K(w) dw / 2 with
    // K(w) = int_{cosh s}^{sqrt w} (2(u - cosh s))^{(m1-2)/2} (w - u^2)^{(m2-2)/2} du.
    static boost::math::quadrature::tanh_sinh<double> ts;
    auto K = [&](double w) {
      const double top = std::sqrt(w);
      if (!(top > chs)) return 0.0;
      if (m2 == 2.0) {
        const double p = 0.5 * (m1 - 2.0);
        return std::pow(2.0, p) * std::pow(top - chs, p + 1.0) / (p + 1.0);
      }
      return ts.integrate(
          [&](double u, double) {
            return std::pow(2.0 * (u - chs), 0.5 * (m1 - 2.0)) * std::pow(std::max(w - u * u, 0.0), 0.5 * (m2 - 2.0));
          },
          chs, top, 1e-14);
    };
    // sqrt w = cosh s + tau^2 removes the endpoint power singularity of K.
    val = 0.5 * integrate_real(
                    [&](double tau) {
                      const double r = chs + tau * tau;
                      return f(std::acosh(r)) * K(r * r) * 4.0 * r * tau;
                    },
                    0.0, std::sqrt(chT - chs), tol);
    val *= sphere_area(m1 - 1.0) * sphere_area(m2 - 1.0);
  }
  return val / X.c_delta;
}

HorocycleFunction abel(const SpaceModel& X, const RadialFn& f, double t_support, const LineGrid& grid) {
  HorocycleFunction u{grid, 0, std::vector<cplx>(grid.size())};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    // even in s: fill the left half by reflection
    const std::size_t mirror = grid.size() - 1 - k;
    u.values[k] = k > mirror ? u.values[mirror] : cplx(abel(X, f, t_support, grid.s(k)));
  }
  return u;
}

double radon(const SpaceModel& X, const RadialFn& f, double t_support, double s) {
  return std::exp(-X.rho * s) * abel(X, f, t_support, s);
}

cplx radon_h2(const SpaceModel& X, const DiskFn& f, double t_support, double beta, double s, double tol) {
  if (X.m1 != 1.0 || X.m2 != 0.0) throw DomainError("radon_h2: H^2 only");
  // cosh d = cosh s + e^s x^2 / 2 along the horocycle.
  const double chT = std::cosh(t_support), chs = std::cosh(s);
  if (chs >= chT) return 0.0;
  const double L = std::sqrt(2.0 * (chT - chs) * std::exp(-s));
  const cplx rot = std::exp(cplx(0.0, beta));
  auto point = [&](double x) {
    const cplx w = std::exp(s) * cplx(x, 1.0);
    const cplx zeta = rot * (w - cplx(0.0, 1.0)) / (w + cplx(0.0, 1.0));
    const double r = std::min(std::abs(zeta), 1.0 - 1e-16);
    return f(2.0 * std::atanh(r), std::arg(zeta));
  };
  return integrate_doubling(point, -L, L, tol) / X.c_delta;
}

HorocycleFunction radon_rho_h2(const SpaceModel& X, const DiskFn& f, double t_support, const LineGrid& grid,
                               int n_max, int n_angles) {
  if (n_angles < 2 * n_max + 1) throw ConfigError("radon_rho_h2: too few angles for n_max");
  const std::size_t ns = grid.size();
  std::vector<cplx> samples(std::size_t(n_angles) * ns);
  for (int j = 0; j < n_angles; ++j)
    for (std::size_t k = 0; k < ns; ++k) {
      const double s = grid.s(k);
      samples[std::size_t(j) * ns + k] =
          std::exp(X.rho * s) * radon_h2(X, f, t_support, 2.0 * kPi * j / n_angles, s);
    }
  HorocycleFunction u{grid, n_max, std::vector<cplx>(std::size_t(2 * n_max + 1) * ns)};
  for (int n = -n_max; n <= n_max; ++n)
    for (std::size_t k = 0; k < ns; ++k) {
      cplx acc = 0.0;
      for (int j = 0; j < n_angles; ++j)
        acc += samples[std::size_t(j) * ns + k] * std::exp(cplx(0.0, -n * 2.0 * kPi * j / n_angles));
      u.at(n, k) = acc / double(n_angles);
    }
  return u;
}

std::vector<cplx> fourier_a(const SpaceModel& X, const HorocycleFunction& u, int n, const std::vector<double>& nus) {
  if (std::abs(n) > u.n_max) throw DomainError("fourier_a: mode beyond n_max");
  std::vector<cplx> out(nus.size());
  const std::size_t ns = u.grid.size();
  for (std::size_t j = 0; j < nus.size(); ++j) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < ns; ++k) {
      const double w = (k == 0 || k + 1 == ns) ? 0.5 : 1.0;
      acc += w * u.at(n, k) * std::exp(cplx(0.0, -nus[j] * u.grid.s(k)));
    }
    out[j] = X.c_delta * u.grid.h * acc;
  }
  return out;
}

double horocycle_norm_sq(const SpaceModel& X, const HorocycleFunction& u) {
  double acc = 0.0;
  const std::size_t ns = u.grid.size();
  for (int n = -u.n_max; n <= u.n_max; ++n)
    for (std::size_t k = 0; k < ns; ++k) {
      const double w = (k == 0 || k + 1 == ns) ? 0.5 : 1.0;
      acc += w * std::norm(u.at(n, k));
    }
  return 0.5 * X.c_delta * u.grid.h * acc;
}

HorocycleFunction lambda_op(const TransformContext& ctx, const RadialFn& f, double t_support, const LineGrid& grid) {
  const SpaceModel& X = ctx.space();
  const HorocycleFunction Rf = abel(X, f, t_support, grid);
  // The nu panels must resolve e^{i nu s} out to |s| = s_max.
  const double width = std::min(ctx.spectral()->width(), 6.0 / grid.s_max());
  const Rule q = panels(0.0, ctx.spectral()->hi, width, ctx.spectral()->per_panel);
  const std::vector<cplx> FA = fourier_a(X, Rf, 0, q.x);
  // G(+-nu) = F_A(nu) / c(-+i nu), F_A even.
  std::vector<cplx> G(q.size()), Gm(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) {
    G[j] = q.w[j] * FA[j] * psi_multiplier(X, q.x[j]);
    Gm[j] = q.w[j] * FA[j] * psi_multiplier(X, -q.x[j]);
  }
  HorocycleFunction u{grid, 0, std::vector<cplx>(grid.size())};
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double s = grid.s(k);
    cplx acc = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
      const cplx e = std::exp(cplx(0.0, q.x[j] * s));
      acc += G[j] * e + Gm[j] * std::conj(e);
    }
    u.values[k] = X.k_space * acc;
  }
  return u;
}

namespace {

struct WData {
  std::vector<cplx> plus, minus;  // c(-i nu) U(nu), c(i nu) U(-nu)
  double residual = 0.0;
};

WData w_data(const TransformContext& ctx, const HorocycleFunction& u) {
  const SpaceModel& X = ctx.space();
  const auto& nus = ctx.spectral()->rule.x;
  std::vector<double> neg(nus.size());
  for (std::size_t j = 0; j < nus.size(); ++j) neg[j] = -nus[j];
  const auto Up = fourier_a(X, u, 0, nus), Um = fourier_a(X, u, 0, neg);
  WData d;
  double diff = 0.0, scale = 0.0;
  for (std::size_t j = 0; j < nus.size(); ++j) {
    d.plus.push_back(c_rank_one(X, cplx(0.0, -nus[j])) * Up[j]);
    d.minus.push_back(c_rank_one(X, cplx(0.0, nus[j])) * Um[j]);
    diff = std::max(diff, std::abs(d.plus[j] - d.minus[j]));
    scale = std::max(scale, std::abs(d.plus[j]));
  }
  d.residual = scale > 0.0 ? diff / scale : 0.0;
  return d;
}

}  // namespace

double w_relation_residual(const TransformContext& ctx, const HorocycleFunction& u) {
  return w_data(ctx, u).residual;
}

RadialFunction lambda_inverse(const TransformContext& ctx, const HorocycleFunction& u, double w_tol) {
  if (u.n_max != 0) throw DomainError("lambda_inverse: radial (mode 0) data only");
  const WData d = w_data(ctx, u);
  if (d.residual > w_tol) throw InconsistentInputError("lambda_inverse: W-relation violated");
  SpectralFunction F{ctx.spectral(), std::vector<cplx>(d.plus.size()), SpectralMeasure::Plancherel, 0.0};
  for (std::size_t j = 0; j < d.plus.size(); ++j) F.values[j] = 0.5 * (d.plus[j] + d.minus[j]);
  return spherical_inverse(ctx, F);
}

}  // namespace symspace
