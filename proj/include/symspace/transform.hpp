#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "symspace/grids.hpp"
#include "symspace/rootsystem.hpp"

namespace symspace {

struct GridOptions {
  double t_max = 10.0;
  double radial_width = 0.25;
  int radial_nodes = 16;
  double nu_max = 40.0;
  double spectral_width = 0.5;
  int spectral_nodes = 16;
};

// Immutable transform context: grids plus a cached table of phi_{i nu_j}(t_i).
class TransformContext {
 public:
  TransformContext(const SpaceModel& X, const GridOptions& opt);

  const SpaceModel& space() const { return X_; }
  const GridOptions& options() const { return opt_; }
  std::shared_ptr<const RadialGrid> radial() const { return radial_; }
  std::shared_ptr<const SpectralGrid> spectral() const { return spectral_; }
  double phi(std::size_t j, std::size_t i) const { return phi_[j * radial_->size() + i]; }
  double density(std::size_t j) const { return density_[j]; }  // |c(i nu_j)|^-2
  double delta(std::size_t i) const { return delta_[i]; }       // delta(t_i)

 private:
  SpaceModel X_;
  GridOptions opt_;
  std::shared_ptr<const RadialGrid> radial_;
  std::shared_ptr<const SpectralGrid> spectral_;
  std::vector<double> phi_, density_, delta_;
};

RadialFunction sample(const TransformContext& ctx, const std::function<cplx(double)>& f);
SpectralFunction sample_spectrum(const TransformContext& ctx, const std::function<cplx(double)>& F,
                                 SpectralMeasure m = SpectralMeasure::Plancherel, double t = 0.0);

struct CalibrationRecord {
  double k_space;     // numerically determined inversion constant
  double k_analytic;  // 1/(2 pi c_delta)
  double residual;    // max |k I(t) - f(t)| / max |f| on the reference bump
};
// Fits the inversion constant on a Gaussian reference function.
CalibrationRecord calibrate_constants(const SpaceModel& X);

// f^(nu) = int f(t) phi_{-i nu}(t) delta(t) dt.
SpectralFunction spherical_transform(const TransformContext& ctx, const RadialFunction& f,
                                     double tail_tol = 1e-10);
// f(t) = k int_0^inf F(nu) phi_{i nu}(t) |c(i nu)|^-2 dnu on the radial grid.
// Throws when |F| |c|^-2 at nu_max exceeds tail_tol times its peak.
RadialFunction spherical_inverse(const TransformContext& ctx, const SpectralFunction& F,
                                 double tail_tol = 1e-5);
cplx spherical_inverse_at(const TransformContext& ctx, const SpectralFunction& F, double t);

double l2_norm_sq(const TransformContext& ctx, const RadialFunction& f);
// k int |F|^2 w(nu) |c|^-2 dnu with w from the measure tag.
double spectral_norm_sq(const TransformContext& ctx, const SpectralFunction& F);

double heat_multiplier(const SpaceModel& X, double nu, double t);
// Heat kernel from the spectral integral; contour-shifted where r^2/4t is large.
double heat_kernel(const SpaceModel& X, double t, double r);
std::vector<double> heat_kernel(const SpaceModel& X, double t, const std::vector<double>& rs);
// e^{-t rho^2} (4 pi t)^{-3/2} (r / sinh r) e^{-r^2/4t} / (normalization), H^3 only.
double heat_kernel_h3_closed(const SpaceModel& X, double t, double r);

SpectralFunction heat_multiply(const TransformContext& ctx, const SpectralFunction& F, double t);
RadialFunction heat_transform(const TransformContext& ctx, const RadialFunction& f, double t);
// (1/|W|) int |F|^2 e^{2t(nu^2+rho^2)} dmu.
double image_norm_t(const TransformContext& ctx, const SpectralFunction& F, double t);

// ---- Helgason transform on H^2, circle modes |n| <= n_max ----

struct DiskFunction {
  std::shared_ptr<const RadialGrid> grid;
  int n_angles = 0;          // theta_j = 2 pi j / n_angles
  std::vector<cplx> values;  // values[i * n_angles + j]

  cplx at_node(std::size_t i, int j) const { return values[i * n_angles + j]; }
  // Mode n radial profile f_n(t_i) = (1/M) sum_j f(t_i, theta_j) e^{-i n theta_j}.
  std::vector<cplx> mode(int n) const;
  cplx operator()(double t, double theta) const;
};

DiskFunction sample_disk(std::shared_ptr<const RadialGrid> grid, int n_angles,
                         const std::function<cplx(double, double)>& f);

// E_n(lambda, t) = (1/2pi) int (cosh t - sinh t cos psi)^{-(lambda+rho)} e^{-i n psi} dpsi.
cplx circle_mode_kernel(const SpaceModel& X, cplx lambda, int n, double t);
std::vector<cplx> circle_mode_kernels(const SpaceModel& X, cplx lambda, int n_max, double t);
// E_n(lambda, t_i) for ascending t_i: hypergeometric start near the origin, then the mode ODE.
std::vector<cplx> circle_mode_table(const SpaceModel& X, cplx lambda, int n, const std::vector<double>& ts);

class HelgasonContext {
 public:
  HelgasonContext(const SpaceModel& X, const GridOptions& opt, int n_max);
  const SpaceModel& space() const { return X_; }
  int n_max() const { return n_max_; }
  std::shared_ptr<const RadialGrid> radial() const { return radial_; }
  std::shared_ptr<const SpectralGrid> spectral() const { return spectral_; }
  // E_{|n|}(i nu_j, t_i).
  cplx E(int n, std::size_t j, std::size_t i) const;
  double density(std::size_t j) const { return density_[j]; }
  double delta(std::size_t i) const { return delta_[i]; }

 private:
  SpaceModel X_;
  int n_max_;
  std::shared_ptr<const RadialGrid> radial_;
  std::shared_ptr<const SpectralGrid> spectral_;
  std::vector<cplx> E_;
  std::vector<double> density_, delta_;
};

struct HelgasonSpectrum {
  std::shared_ptr<const SpectralGrid> grid;
  int n_max = 0;
  std::vector<cplx> values;  // values[(n + n_max) * N_nu + j]
  cplx at(int n, std::size_t j) const { return values[std::size_t(n + n_max) * grid->size() + j]; }
};

// f^(nu, n) = int f_n(t) E_n(-i nu, t) delta(t) dt; `reflected` evaluates at -nu.
HelgasonSpectrum helgason_transform(const HelgasonContext& ctx, const DiskFunction& f, bool reflected = false);
DiskFunction helgason_inverse(const HelgasonContext& ctx, const HelgasonSpectrum& F, int n_angles);
// Largest |F_n| over modes at the truncation edge relative to the overall maximum.
double mode_truncation_error(const HelgasonSpectrum& F);

// Scalar by which A(w,-lambda) acts on e^{in theta}: P_lambda(e_n)(x*) / P_{-lambda}(e_n)(x*).
cplx intertwining_scalar(const SpaceModel& X, cplx lambda, int n, double t_star);

}  // namespace symspace
