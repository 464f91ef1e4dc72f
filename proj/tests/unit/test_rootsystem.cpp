#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "symspace/error.hpp"
#include "symspace/rootsystem.hpp"

using namespace symspace;
using Eigen::VectorXd;

namespace {

VectorXd v1(double a) { return VectorXd::Constant(1, a); }
VectorXd v2(double a, double b) {
  VectorXd v(2);
  v << a, b;
  return v;
}

// Brute force: Z in conv(W.Y) iff Z is in some triangle (or segment) of orbit points.
bool hull_oracle(const WeylGroup& wg, const VectorXd& Z, const VectorXd& Y, double tol) {
  std::vector<VectorXd> pts;
  for (const auto& w : wg.elements) pts.push_back(w * Y);
  if (Y.size() == 1) {
    double lo = 1e300, hi = -1e300;
    for (const auto& p : pts) lo = std::min(lo, p[0]), hi = std::max(hi, p[0]);
    return Z[0] >= lo - tol && Z[0] <= hi + tol;
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        Eigen::Matrix3d A;
        A << pts[i][0], pts[j][0], pts[k][0], pts[i][1], pts[j][1], pts[k][1], 1, 1, 1;
        if (std::abs(A.determinant()) < 1e-12) continue;
        const Eigen::Vector3d c = A.inverse() * Eigen::Vector3d(Z[0], Z[1], 1.0);
        if (c.minCoeff() >= -tol) return true;
      }
  return false;
}

}  // namespace

TEST_CASE("build_space rho values") {
  CHECK(hyperbolic(3).rho == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hyperbolic(2).rho == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(jacobi(3, 2).rho == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(complex_a1().rho == 1.0);
  CHECK(build_space("jacobi(3,2)").name == "jacobi(3,2)");
  CHECK_THROWS_AS(jacobi(0, 1), DomainError);
  CHECK_THROWS_AS(build_space("sphere(2)"), ConfigError);
}

TEST_CASE("Weyl groups") {
  CHECK(hyperbolic(2).wg.order() == 2);
  CHECK(jacobi(3, 2).wg.order() == 2);
  const RootSystem a2 = a2_roots(1.0), b2 = b2_roots(1.0, 1.0);
  const WeylGroup wa = weyl_group(a2), wb = weyl_group(b2);
  CHECK(wa.order() == 6);
  CHECK(wb.order() == 8);
  for (const auto* pair : {&a2, &b2}) {
    const WeylGroup wg = weyl_group(*pair);
    std::vector<VectorXd> roots;
    for (const auto& r : pair->positive_roots) roots.push_back(r.alpha), roots.push_back(-r.alpha);
    for (const auto& w : wg.elements) {
      CHECK((w.transpose() * w - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-12);
      // w acts on covectors by alpha -> alpha o w^-1 = w alpha for orthogonal w
      for (const auto& a : roots) {
        const VectorXd wa_ = w * a;
        bool found = false;
        for (const auto& b : roots) found = found || (wa_ - b).norm() < 1e-12;
        CHECK(found);
      }
      for (const auto& u : wg.elements) {
        bool closed = false;
        for (const auto& e : wg.elements) closed = closed || (e - w * u).norm() < 1e-10;
        CHECK(closed);
      }
    }
  }
}

TEST_CASE("rho is dominant and equals half the weighted root sum") {
  for (const RootSystem& rs : {rank_one_roots(3, 2), a2_roots(2.0), b2_roots(1.0, 3.0)}) {
    VectorXd s = VectorXd::Zero(rs.rank);
    for (const auto& r : rs.positive_roots) s += r.multiplicity * r.alpha;
    CHECK((2.0 * rs.rho - s).norm() < 1e-14);
    for (const auto& a : rs.simple_roots) CHECK(a.dot(rs.dual(rs.rho)) > 0.0);
  }
}

TEST_CASE("in_omega") {
  const RootSystem a = rank_one_roots(1, 0), bc = rank_one_roots(3, 2);
  CHECK(in_omega(a, v1(1.5)));
  CHECK_FALSE(in_omega(a, v1(1.6)));
  CHECK_FALSE(in_omega(bc, v1(0.8)));
  CHECK(in_omega(bc, v1(0.7)));
}

TEST_CASE("in_conv_weyl_orbit examples") {
  const SpaceModel X = hyperbolic(2);
  CHECK(in_conv_weyl_orbit(X.rs, X.wg, v1(0.3), v1(0.5)));
  CHECK(in_conv_weyl_orbit(X.rs, X.wg, v1(0.5), v1(0.5)));
  CHECK_FALSE(in_conv_weyl_orbit(X.rs, X.wg, v1(-0.6), v1(0.5)));
}

TEST_CASE("in_conv_weyl_orbit agrees with brute-force hull on 1000 pairs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (const RootSystem& rs : {rank_one_roots(1, 0), a2_roots(1.0), b2_roots(1.0, 1.0)}) {
    const WeylGroup wg = weyl_group(rs);
    int agree = 0;
    for (int i = 0; i < 1000; ++i) {
      VectorXd Z(rs.rank), Y(rs.rank);
      for (int j = 0; j < rs.rank; ++j) Z[j] = U(rng), Y[j] = U(rng);
      agree += in_conv_weyl_orbit(rs, wg, Z, Y, 1e-12) == hull_oracle(wg, Z, Y, 1e-12);
    }
    CHECK(agree == 1000);
  }
}

TEST_CASE("omega weight and sup") {
  const SpaceModel X = hyperbolic(2);
  CHECK(omega_weight(X.rs, X.wg, v1(0.7), v1(0.0)) == 1.0);
  CHECK(omega_weight(X.rs, X.wg, v1(1.0), v1(0.5)) == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
  CHECK(omega_sup(X.rs, X.wg, v1(0.0)) == 1.0);
  CHECK(omega_sup(X.rs, X.wg, v1(1.0)) == doctest::Approx(std::cosh(std::numbers::pi)).epsilon(1e-14));
  CHECK(omega_sup(X, 1.0) == doctest::Approx(11.591953275521519).epsilon(1e-14));
  const SpaceModel J = jacobi(3, 2);
  CHECK(omega_sup(J.rs, J.wg, v1(2.0)) ==
        doctest::Approx(std::cosh(std::numbers::pi)).epsilon(1e-14));

  std::mt19937_64 rng(3);
  for (const RootSystem& rs : {rank_one_roots(1, 0), a2_roots(1.0), b2_roots(1.0, 1.0)}) {
    const WeylGroup wg = weyl_group(rs);
    std::uniform_real_distribution<double> U(-1.6, 1.6);
    VectorXd nu(rs.rank);
    for (int j = 0; j < rs.rank; ++j) nu[j] = U(rng);
    const double sup = omega_sup(rs, wg, nu);
    int sampled = 0;
    while (sampled < 100) {
      VectorXd Y(rs.rank), Y2(rs.rank);
      for (int j = 0; j < rs.rank; ++j) Y[j] = U(rng), Y2[j] = U(rng);
      if (!in_omega(rs, Y) || !in_omega(rs, Y2)) continue;
      ++sampled;
      const double w = omega_weight(rs, wg, nu, Y);
      CHECK(w <= sup * (1 + 1e-14));
      // W-invariance of omega and of Omega
      for (const auto& g : wg.elements) {
        CHECK(std::abs(omega_weight(rs, wg, nu, g * Y) / w - 1.0) < 1e-13);
        CHECK(in_omega(rs, g * Y));
      }
      // midpoint convexity
      const double mid = omega_weight(rs, wg, nu, 0.5 * (Y + Y2));
      CHECK(mid <= 0.5 * (w + omega_weight(rs, wg, nu, Y2)) * (1 + 1e-14));
    }
  }
}
