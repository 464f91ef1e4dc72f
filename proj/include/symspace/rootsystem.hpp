#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace symspace {

struct PositiveRoot {
  Eigen::VectorXd alpha;  // covector in the coordinates of a
  double multiplicity;
};

struct RootSystem {
  int rank = 0;
  std::vector<PositiveRoot> positive_roots;
  std::vector<Eigen::VectorXd> simple_roots;
  Eigen::MatrixXd inner_product;  // on a
  Eigen::VectorXd rho;            // covector

  // Vector H_alpha in a dual to a covector via the inner product.
  Eigen::VectorXd dual(const Eigen::VectorXd& covector) const;
  Eigen::VectorXd reflect(const Eigen::VectorXd& alpha, const Eigen::VectorXd& Y) const;
};

struct WeylGroup {
  std::vector<Eigen::MatrixXd> elements;
  std::size_t order() const { return elements.size(); }
};

// Rank one: positive roots {alpha} or {alpha, 2 alpha}, alpha(H1) = 1.
RootSystem rank_one_roots(double m_alpha, double m_2alpha);
RootSystem a2_roots(double m);
RootSystem b2_roots(double m_short, double m_long);

// Closure of the group generated by the simple reflections.
WeylGroup weyl_group(const RootSystem& rs);

struct SpectralParam {
  Eigen::VectorXd nu;     // lambda = i nu + shift
  Eigen::VectorXd shift;  // real part of lambda; empty means zero
  Eigen::VectorXcd lambda() const;
  bool dominant(const RootSystem& rs) const;
};

enum class SpaceKind { Hyperbolic, Jacobi, ComplexA1 };

// Rank-one model X = G/K with radial coordinate t, alpha(H1) = 1.
struct SpaceModel {
  std::string name;
  SpaceKind kind = SpaceKind::Jacobi;
  int n = 0;  // dimension of X
  double m1 = 0.0, m2 = 0.0;
  RootSystem rs;
  WeylGroup wg;
  double rho = 0.0;      // rho(H1)
  double alpha_j = 0.0;  // Jacobi parameters
  double beta_j = 0.0;
  double c_delta = 0.0;  // density prefactor
  double k_space = 0.0;  // inversion constant, 1/(2 pi c_delta)
  double omega_bound = 0.0;  // Omega = {|y| < omega_bound}

  // Radial density delta(t) = c_delta (2 sinh t)^m1 (2 sinh 2t)^m2.
  double density(double t) const;
  // Radial Laplacian first-order coefficient m1 coth t + 2 m2 coth 2t.
  double drift(double t) const;
  int weyl_order() const { return 2; }
};

SpaceModel hyperbolic(int n);
SpaceModel jacobi(double m1, double m2);
SpaceModel complex_a1();
// Parses "hyperbolic(3)", "jacobi(3,2)", "complex_a1".
SpaceModel build_space(const std::string& spec);

double sphere_area(double d);  // |S^d|

bool in_omega(const RootSystem& rs, const Eigen::VectorXd& Y);
bool in_conv_weyl_orbit(const RootSystem& rs, const WeylGroup& wg, const Eigen::VectorXd& Z,
                        const Eigen::VectorXd& Y, double slack = 0.0);
// Dominant-chamber representative of Y.
Eigen::VectorXd dominant_rep(const RootSystem& rs, const Eigen::VectorXd& Y);
double omega_weight(const RootSystem& rs, const WeylGroup& wg, const Eigen::VectorXd& nu,
                    const Eigen::VectorXd& Y);
// Vertices of the closure of Omega.
std::vector<Eigen::VectorXd> omega_vertices(const RootSystem& rs);
double omega_sup(const RootSystem& rs, const WeylGroup& wg, const Eigen::VectorXd& nu);

// Rank-one shortcuts in the H1 coordinate.
double omega_weight(const SpaceModel& X, double nu, double y);
double omega_sup(const SpaceModel& X, double nu);

}  // namespace symspace
