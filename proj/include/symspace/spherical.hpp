#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "symspace/rootsystem.hpp"
#include "symspace/special.hpp"

namespace symspace {

// Boundary point of the ball model, a unit vector of R^n.
struct BoundaryPoint {
  Eigen::VectorXd b;
  static BoundaryPoint angle(double theta);  // n = 2
  static BoundaryPoint unit(const Eigen::VectorXd& v);
};

// Ball-model point at distance t from the origin in direction u.
Eigen::VectorXd ball_point(double t, const Eigen::VectorXd& u);
double ball_distance(const Eigen::VectorXd& x);

// Horocycle coordinate <x,b> = log((1-|x|^2)/|x-b|^2) in the ball model (m2 = 0 spaces).
double busemann(const SpaceModel& X, const Eigen::VectorXd& x, const BoundaryPoint& b);
cplx e_kernel(const SpaceModel& X, cplx lambda, const BoundaryPoint& b, const Eigen::VectorXd& x);

struct PhiIntegralOptions {
  double tol = 1e-10;
  int max_doublings = 8;
};

// phi_lambda(t) as the boundary integral with the probability measure db.
cplx phi_integral(const SpaceModel& X, cplx lambda, double t, const PhiIntegralOptions& opt = {});

// Jacobi-function evaluation: -sinh^2 series near 0, Harish-Chandra expansion for
// large t, radial ODE continuation in between.
cplx phi_rank_one(const SpaceModel& X, cplx lambda, double t);
// Values at ascending nonnegative ts from a single ODE pass.
std::vector<cplx> phi_rank_one_table(const SpaceModel& X, cplx lambda, const std::vector<double>& ts);
cplx phi_series(const SpaceModel& X, cplx lambda, cplx z, cplx* derivative = nullptr);
// Phi_lambda(z) = (2 cosh z)^(lambda-rho) 2F1((rho-lambda)/2, (a-b+1-lambda)/2; 1-lambda; cosh^-2 z).
cplx hc_Phi(const SpaceModel& X, cplx lambda, cplx z);
cplx phi_hc(const SpaceModel& X, cplx lambda, double t);

// H^3 closed form sinh(lambda t) / (lambda sinh t).
cplx phi_complex_group(cplx lambda, double t);
double phi_complex_group(double nu, double t);

// Holomorphic continuation to z = t + i s with |s| inside Omega.
cplx phi_crown(const SpaceModel& X, cplx lambda, cplx z);
// Same continuation on the doubled strip |s| < 2 * omega_bound, where the
// relative coordinates of pairs of crown points live.
cplx phi_continued(const SpaceModel& X, cplx lambda, cplx z);

using BoundaryFunction = std::function<cplx(const BoundaryPoint&)>;
// P_lambda F(x) = int_B F(b) e_{lambda,b}(x) db, for H^2 and H^3.
cplx poisson_transform(const SpaceModel& X, cplx lambda, const BoundaryFunction& F,
                       const Eigen::VectorXd& x, double tol = 1e-11);

}  // namespace symspace
