#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "symspace/rootsystem.hpp"
#include "symspace/special.hpp"
#include "symspace/transform.hpp"

namespace symspace {

using Mat2c = Eigen::Matrix2cd;

// Matrix models: H^2 = SL(2,R)/SO(2); H^3 = SL(2,C)/SU(2), complexified as pairs (g, conj g).
enum class CrownModel { SL2R, SL2C };
CrownModel crown_model(const SpaceModel& X);

// exp(i y H1) = diag(e^{iy/2}, e^{-iy/2}).
Mat2c exp_iyH1(double y);

// exp(i y H1) g = k a n with a = exp(zeta H1). In the pair model the second component
// exp(i y H1) conj(g) = k2 a n2 with k1^T k2 = I; for SL(2,R), k2 = k1 and n2 = n1.
struct ComplexIwasawaResult {
  cplx a_exponent;
  Mat2c k1, k2, n1, n2;
};
// zeta is tracked continuously along tau -> exp(i tau y H1) g, tau in [0, 1].
ComplexIwasawaResult iwasawa_complex(const SpaceModel& X, const Mat2c& g, double y);

struct ConvexityResult {
  double Z = 0.0;  // Im a_exponent
  bool ok = false;
};
ConvexityResult convexity_check(const SpaceModel& X, const Mat2c& g, double Y, double slack = 1e-9);

struct ConvexitySampleStats {
  std::size_t samples = 0, violations = 0;
  double max_ratio = 0.0;   // sup |Z| / |Y|
  double max_excess = 0.0;  // sup (|Z| - |Y|)
};
// Random (g, Y) with g = k a n; `enriched` draws g with |g21| small, which approaches equality.
ConvexitySampleStats convexity_sample(const SpaceModel& X, std::uint64_t seed, std::size_t n, bool enriched);

// Relative coordinate of sigma(w)^{-1} z for z = exp((t1 + i s1) H1) x0, w = exp((t2 + i s2) H1) x0.
cplx sigma_relative(const SpaceModel& X, cplx z, cplx w);

// ||F||^2 = k int |F|^2 omega(nu) |c|^-2 dnu with omega = sup over the closure of Omega.
double hx_norm(const TransformContext& ctx, const SpectralFunction& F);
// (F, G) in the same weighted inner product.
cplx hx_inner(const TransformContext& ctx, const SpectralFunction& F, const SpectralFunction& G);
// C(z) = (k int |phi_{i nu}(z)|^2 / omega |c|^-2 dnu)^{1/2}, the sharp point-evaluation constant.
double point_evaluation_constant(const TransformContext& ctx, cplx z);
// F(z) = k int F(nu) phi_{i nu}(z) |c|^-2 dnu with phi continued into the crown slice.
cplx hx_extension(const TransformContext& ctx, const SpectralFunction& F, cplx z);

// K(z, w) = k int phi_{i nu}(sigma(w)^{-1} z) / omega |c|^-2 dnu.
cplx reproducing_kernel_K(const TransformContext& ctx, cplx z, cplx w);
// K-averaged kernel k int phi(z) conj(phi(w)) / omega |c|^-2 dnu, and its spectrum in z.
cplx reproducing_kernel_K_averaged(const TransformContext& ctx, cplx z, cplx w);
SpectralFunction kernel_spectrum(const TransformContext& ctx, cplx w);
// int_B e_{lambda,b}(z) e_{-lambda,b}(y) db for z, y = exp(w H1) x0 with complex w, by quadrature over the
// boundary sphere of the ball model (H^2, H^3). At y = sigma(w) this is phi_lambda(sigma(w)^{-1} z).
cplx boundary_pairing(const SpaceModel& X, cplx lambda, cplx z, cplx y, int nodes = 256);

// K_t(z, w) = h_{2t}(sigma(w)^{-1} z).
cplx reproducing_kernel_Kt(const TransformContext& ctx, cplx z, cplx w, double t);

}  // namespace symspace
