#include "symspace/ode.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>

namespace symspace {

namespace odeint = boost::numeric::odeint;

std::vector<RadialState> integrate_radial(const SpaceModel& X, cplx lambda, cplx z0,
                                          RadialState y0, cplx dir,
                                          const std::vector<double>& sigmas, double tol, double n2) {
  const cplx k2 = lambda * lambda - X.rho * X.rho;
  const double m1 = X.m1, m2 = X.m2;
  auto rhs = [&](const RadialState& y, RadialState& dy, double s) {
    const cplx z = z0 + s * dir;
    cplx drift = m1 / std::tanh(z);
    if (m2 > 0.0) drift += 2.0 * m2 / std::tanh(2.0 * z);
    cplx k = k2;
    if (n2 != 0.0) {
      const cplx sh = std::sinh(z);
      k += n2 / (sh * sh);
    }
    dy[0] = dir * y[1];
    dy[1] = dir * (k * y[0] - drift * y[1]);
  };
  std::vector<RadialState> out;
  out.reserve(sigmas.size());
  std::vector<double> times{0.0};
  times.insert(times.end(), sigmas.begin(), sigmas.end());
  // Relative control only: phi decays like e^{-rho t} and must stay accurate there.
  auto stepper = odeint::make_controlled(1e-200, tol, odeint::runge_kutta_fehlberg78<RadialState>());
  const double scale = std::max(1.0, std::abs(lambda));
  std::size_t idx = 0;
  odeint::integrate_times(
      stepper, rhs, y0, times.begin(), times.end(), 0.05 / scale,
      [&](const RadialState& y, double) {
        if (idx++ > 0) out.push_back(y);
      });
  return out;
}

}  // namespace symspace
