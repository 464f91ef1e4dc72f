#pragma once

#include <functional>
#include <vector>

#include "symspace/rootsystem.hpp"
#include "symspace/special.hpp"
#include "symspace/transform.hpp"

namespace symspace {

// Uniform grid s_k = (k - half) h on [-s_max, s_max] in the log coordinate of A.
struct LineGrid {
  double h = 0.0;
  int half = 0;
  std::size_t size() const { return std::size_t(2 * half + 1); }
  double s(std::size_t k) const { return (double(k) - half) * h; }
  double s_max() const { return half * h; }
};
LineGrid make_line_grid(double s_max, double h);

// Samples on B x A: circle modes |n| <= n_max of b, uniform grid in s.
struct HorocycleFunction {
  LineGrid grid;
  int n_max = 0;
  std::vector<cplx> values;  // values[(n + n_max) * size + k]
  cplx at(int n, std::size_t k) const { return values[std::size_t(n + n_max) * grid.size() + k]; }
  cplx& at(int n, std::size_t k) { return values[std::size_t(n + n_max) * grid.size() + k]; }
};

using RadialFn = std::function<double(double)>;
using DiskFn = std::function<cplx(double t, double theta)>;

// Abel transform F_f(s) = e^{rho s} int_N f(a_s n x0) dn of a radial f vanishing beyond t_support.
double abel(const SpaceModel& X, const RadialFn& f, double t_support, double s, double tol = 1e-12);
HorocycleFunction abel(const SpaceModel& X, const RadialFn& f, double t_support, const LineGrid& grid);

// Horocycle integral R f(b, a_s) for radial f on any rank-one model.
double radon(const SpaceModel& X, const RadialFn& f, double t_support, double s);
// Horocycle integral on H^2 through the upper half-plane orbit e^s (x + i), rotated to b = e^{i beta}.
cplx radon_h2(const SpaceModel& X, const DiskFn& f, double t_support, double beta, double s, double tol = 1e-12);
// a^rho R f sampled on n_angles directions and reduced to circle modes |n| <= n_max.
HorocycleFunction radon_rho_h2(const SpaceModel& X, const DiskFn& f, double t_support, const LineGrid& grid,
                               int n_max, int n_angles);

// F_A u_n(nu) = c_delta int u_n(s) e^{-i nu s} ds (trapezoid on the grid).
std::vector<cplx> fourier_a(const SpaceModel& X, const HorocycleFunction& u, int n, const std::vector<double>& nus);

// ||u||^2 in L^2(B x A, dtau), dtau = (c_delta / 2) ds db.
double horocycle_norm_sq(const SpaceModel& X, const HorocycleFunction& u);

// Lambda f = F_A^{-1}( F_A(R_rho f) / c(-i nu) ) for radial f, spectral integral over ctx's nu grid.
HorocycleFunction lambda_op(const TransformContext& ctx, const RadialFn& f, double t_support, const LineGrid& grid);

// max |c(i nu) U(-nu) - c(-i nu) U(nu)| / max |c(-i nu) U(nu)| on ctx's nu grid, U = F_A u_0.
double w_relation_residual(const TransformContext& ctx, const HorocycleFunction& u);

// Inverse of lambda_op: f^ = c(-i nu) F_A u, then the spherical inverse.
RadialFunction lambda_inverse(const TransformContext& ctx, const HorocycleFunction& u, double w_tol = 1e-6);

}  // namespace symspace
