#pragma once

#include <vector>

#include "symspace/radon.hpp"
#include "symspace/transform.hpp"

namespace symspace {

// u(z) = sum_{|j| <= J} amp_j e^{-tau nu_j^2} e^{i nu_j z}, nu_j = j dnu: trapezoid rule for an
// inverse F_A integral, entire in z = s + i y. dnu = 2 pi / (N h) so a line grid of step h is an FFT.
struct ASeries {
  double h = 0.0, dnu = 0.0, tau = 0.0;
  int N = 0, J = 0;
  std::vector<cplx> amp;  // amp[j + J]

  double nu(int j) const { return j * dnu; }
  cplx operator()(cplx z) const;
  // e^{shift} u(s_k + i y) on the grid; the exponent is combined before exponentiation.
  std::vector<cplx> on_line(const LineGrid& grid, double y, double shift = 0.0) const;
};

struct ASeriesOptions {
  double h = 0.02;        // line step of the FFT grid
  double period = 160.0;  // minimal aliasing period in s
};

// Amplitudes k F(|nu|) / c(-i nu) dnu from the spectral function on ctx's grid (zero beyond nu_max).
ASeries a_series(const TransformContext& ctx, const SpectralFunction& F, double tau, const ASeriesOptions& opt = {});

// Phi = e^{t rho^2} Lambda(H_t f), holomorphic on the complexified A (mode 0).
struct FockFunction {
  ASeries u;
  double t = 0.0;
  cplx operator()(cplx z) const { return u(z); }
};

FockFunction lambda_t(const TransformContext& ctx, const SpectralFunction& fhat, double t, const ASeriesOptions& opt = {});
// (Lambda f * h^A_t)(z) with the Gaussian continued to complex z; trapezoid on the grid of lf.
cplx lambda_t_convolution(const HorocycleFunction& lf, double t, cplx z);

struct FockNormOptions {
  double x_max = 60.0;
  double amp_floor = 1e-12;  // relative amplitude below which nu nodes do not set the Y range
};
// (c_delta / 2) (2 pi t)^{-1/2} int int |Phi(X + iY)|^2 e^{-Y^2/2t} dX dY.
double fock_norm(const SpaceModel& X, const FockFunction& phi, const FockNormOptions& opt = {});

// (4 pi t)^{-1/2} int Phi(s + iY) e^{-Y^2/4t} dY recovers Lambda f on the grid; lambda_inverse gives f.
HorocycleFunction gaussian_average(const FockFunction& phi, const LineGrid& grid, double tail_tol = 1e-10);
RadialFunction segal_bargmann_invert(const TransformContext& ctx, const FockFunction& phi, const LineGrid& grid);

// Samples of a holomorphic function on the strip A(Omega): slices y in ys.
struct HorocycleDomainFunction {
  LineGrid grid;
  std::vector<double> ys;
  std::vector<std::vector<cplx>> slices;  // slices[iy][k]
  ASeries u;
  HorocycleFunction slice(std::size_t iy) const { return {grid, 0, slices[iy]}; }
};

// y_j = b (1 - 2^{-j}), j = 0..levels, b the Omega bound.
std::vector<double> omega_y_grid(const SpaceModel& X, int levels = 10);

// F_A(slice y)(nu) = F(nu) e^{-nu y} / c(-i nu): the tau -> 0 limit of the extension of Lambda(H_tau F).
HorocycleDomainFunction lambda_tilde(const TransformContext& ctx, const SpectralFunction& F, const LineGrid& grid,
                                     const std::vector<double>& ys, double tau = 0.0, const ASeriesOptions& opt = {});

struct HxiNorm {
  double value = 0.0;     // extrapolated to the Omega boundary
  double sup_grid = 0.0;  // largest sampled slice norm, a lower bound
  double y_sup = 0.0;
  bool monotone = true;   // slice norms nondecreasing in |y| along the grid
  std::vector<double> slice_norms;
};
HxiNorm hxi_norm(const SpaceModel& X, const HorocycleDomainFunction& u);

// sup_y slice distance between Lambda~(e^{-t(nu^2+rho^2)} F) and Lambda~(F), one entry per t.
std::vector<double> lambda_tilde_convergence(const TransformContext& ctx, const SpectralFunction& F, const LineGrid& grid,
                                             const std::vector<double>& ys, const std::vector<double>& ts);

}  // namespace symspace
