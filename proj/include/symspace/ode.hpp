#pragma once

#include <array>
#include <vector>

#include "symspace/rootsystem.hpp"
#include "symspace/special.hpp"

namespace symspace {

using RadialState = std::array<cplx, 2>;  // (phi, dphi/dz)

// Integrates phi'' + (m1 coth z + 2 m2 coth 2z) phi' = (lambda^2 - rho^2) phi
// along the straight segment z0 + sigma * dir, |dir| = 1, and records the state
// at each arclength in `sigmas` (nondecreasing, >= 0). A nonzero n2 adds the
// angular term n2 / sinh^2 z to the right-hand side (circle mode n, n2 = n^2).
std::vector<RadialState> integrate_radial(const SpaceModel& X, cplx lambda, cplx z0,
                                          RadialState y0, cplx dir,
                                          const std::vector<double>& sigmas, double tol = 1e-13,
                                          double n2 = 0.0);

}  // namespace symspace
