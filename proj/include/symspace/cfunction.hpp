#pragma once

#include "symspace/rootsystem.hpp"
#include "symspace/special.hpp"

namespace symspace {

// Rank-one c-function in lambda(H1), normalized by c(rho) = 1:
//   c(l) = 2^(rho-l) Gamma(a+1) Gamma(l) / (Gamma((l+rho)/2) Gamma((l+m1/2+1)/2)),
// a = (m1+m2-1)/2.
cplx c_rank_one(const SpaceModel& X, cplx lambda);
// Product over indivisible positive roots (one factor in rank one).
cplx c_gk(const SpaceModel& X, cplx lambda);
// 1/c(lambda), entire in the region used; zero at the poles of c.
cplx c_reciprocal(const SpaceModel& X, cplx lambda);
// |c(i nu)|^-2 for real nu, with the limit 0 at nu = 0.
double plancherel_density(const SpaceModel& X, double nu);
// 1/c(-i nu); nu may be complex.
cplx psi_multiplier(const SpaceModel& X, cplx nu);

}  // namespace symspace
