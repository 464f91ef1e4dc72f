#include "symspace/cfunction.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "symspace/error.hpp"

namespace symspace {

namespace {

std::string describe(cplx z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

void require_regular(cplx arg) {
  if (is_nonpositive_integer(arg, 1e-12))
    throw SingularValueError("Gamma pole at argument " + describe(arg));
}

}  // namespace

cplx c_rank_one(const SpaceModel& X, cplx lambda) {
  require_regular(lambda);
  const cplx g1 = 0.5 * (lambda + X.rho);
  const cplx g2 = 0.5 * (lambda + 0.5 * X.m1 + 1.0);
  // Zeros of the denominator make c vanish.
  if (is_nonpositive_integer(g1, 1e-12) || is_nonpositive_integer(g2, 1e-12)) return 0.0;
  const cplx logc = (X.rho - lambda) * std::log(2.0) + lgamma(cplx(X.alpha_j + 1.0)) +
                    lgamma(lambda) - lgamma(g1) - lgamma(g2);
  return std::exp(logc);
}

cplx c_gk(const SpaceModel& X, cplx lambda) { return c_rank_one(X, lambda); }

cplx c_reciprocal(const SpaceModel& X, cplx lambda) {
  const cplx g1 = 0.5 * (lambda + X.rho);
  const cplx g2 = 0.5 * (lambda + 0.5 * X.m1 + 1.0);
  require_regular(g1);
  require_regular(g2);
  if (is_nonpositive_integer(lambda, 1e-12)) return 0.0;
  const cplx logr = -(X.rho - lambda) * std::log(2.0) - lgamma(cplx(X.alpha_j + 1.0)) -
                    lgamma(lambda) + lgamma(g1) + lgamma(g2);
  return std::exp(logr);
}

double plancherel_density(const SpaceModel& X, double nu) {
  nu = std::abs(nu);
  if (nu == 0.0) return 0.0;
  // |Gamma(i nu)|^-2 = nu sinh(pi nu) / pi, written in logs.
  const double pi = std::numbers::pi;
  const double log_inv_g2 =
      std::log(nu / pi) + pi * nu + std::log1p(-std::exp(-2.0 * pi * nu)) - std::log(2.0);
  const cplx g1 = 0.5 * (cplx(0.0, nu) + X.rho);
  const cplx g2 = 0.5 * (cplx(0.0, nu) + 0.5 * X.m1 + 1.0);
  const double logd = 2.0 * (lgamma(g1).real() + lgamma(g2).real()) -
                      2.0 * lgamma(cplx(X.alpha_j + 1.0)).real() - 2.0 * X.rho * std::log(2.0) +
                      log_inv_g2;
  return std::exp(logd);
}

cplx psi_multiplier(const SpaceModel& X, cplx nu) {
  // Poles of 1/c are the zeros of c; c_reciprocal raises there.
  return c_reciprocal(X, cplx(0.0, -1.0) * nu);
}

}  // namespace symspace
