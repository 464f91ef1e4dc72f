#include "symspace/rootsystem.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <regex>

#include "symspace/error.hpp"

namespace symspace {

Eigen::VectorXd RootSystem::dual(const Eigen::VectorXd& covector) const {
  return inner_product.ldlt().solve(covector);
}

Eigen::VectorXd RootSystem::reflect(const Eigen::VectorXd& alpha, const Eigen::VectorXd& Y) const {
  const Eigen::VectorXd h = dual(alpha);
  return Y - 2.0 * alpha.dot(Y) / alpha.dot(h) * h;
}

namespace {

RootSystem finish(RootSystem rs) {
  rs.rho = Eigen::VectorXd::Zero(rs.rank);
  for (const auto& r : rs.positive_roots) rs.rho += 0.5 * r.multiplicity * r.alpha;
  const Eigen::LLT<Eigen::MatrixXd> llt(rs.inner_product);
  if (llt.info() != Eigen::Success || !rs.inner_product.isApprox(rs.inner_product.transpose()))
    throw DomainError("inner product must be symmetric positive definite");
  return rs;
}

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(v.size());
  int i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

}  // namespace

RootSystem rank_one_roots(double m_alpha, double m_2alpha) {
  if (!(m_alpha > 0.0) || m_2alpha < 0.0)
    throw DomainError("invalid multiplicities: need m_alpha > 0, m_2alpha >= 0");
  RootSystem rs;
  rs.rank = 1;
  rs.inner_product = Eigen::MatrixXd::Identity(1, 1);
  rs.positive_roots.push_back({vec({1.0}), m_alpha});
  if (m_2alpha > 0.0) rs.positive_roots.push_back({vec({2.0}), m_2alpha});
  rs.simple_roots = {vec({1.0})};
  return finish(rs);
}

RootSystem a2_roots(double m) {
  RootSystem rs;
  rs.rank = 2;
  rs.inner_product = Eigen::MatrixXd::Identity(2, 2);
  const double s = std::sqrt(3.0) / 2.0;
  const Eigen::VectorXd a1 = vec({1.0, 0.0}), a2 = vec({-0.5, s});
  rs.positive_roots = {{a1, m}, {a2, m}, {a1 + a2, m}};
  rs.simple_roots = {a1, a2};
  return finish(rs);
}

RootSystem b2_roots(double m_short, double m_long) {
  RootSystem rs;
  rs.rank = 2;
  rs.inner_product = Eigen::MatrixXd::Identity(2, 2);
  const Eigen::VectorXd a1 = vec({1.0, -1.0}), a2 = vec({0.0, 1.0});
  rs.positive_roots = {{a1, m_long}, {a2, m_short}, {a1 + a2, m_short}, {a1 + 2.0 * a2, m_long}};
  rs.simple_roots = {a1, a2};
  return finish(rs);
}

WeylGroup weyl_group(const RootSystem& rs) {
  const int r = rs.rank;
  std::vector<Eigen::MatrixXd> gens;
  for (const auto& a : rs.simple_roots) {
    Eigen::MatrixXd m(r, r);
    for (int j = 0; j < r; ++j) m.col(j) = rs.reflect(a, Eigen::VectorXd::Unit(r, j));
    gens.push_back(m);
  }
  WeylGroup wg;
  wg.elements.push_back(Eigen::MatrixXd::Identity(r, r));
  for (std::size_t i = 0; i < wg.elements.size(); ++i) {
    for (const auto& g : gens) {
      const Eigen::MatrixXd cand = g * wg.elements[i];
      bool seen = false;
      for (const auto& e : wg.elements)
        if ((e - cand).cwiseAbs().maxCoeff() < 1e-10) {
          seen = true;
          break;
        }
      if (!seen) wg.elements.push_back(cand);
      if (wg.elements.size() > 48) throw DomainError("Weyl group enumeration exceeded rank-2 bound");
    }
  }
  return wg;
}

Eigen::VectorXcd SpectralParam::lambda() const {
  Eigen::VectorXcd out(nu.size());
  for (int i = 0; i < nu.size(); ++i)
    out[i] = std::complex<double>(shift.size() ? shift[i] : 0.0, nu[i]);
  return out;
}

bool SpectralParam::dominant(const RootSystem& rs) const {
  const Eigen::VectorXd h = rs.dual(nu);
  for (const auto& a : rs.simple_roots)
    if (a.dot(h) < 0.0) return false;
  return true;
}

double sphere_area(double d) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * (d + 1.0)) / boost::math::tgamma(0.5 * (d + 1.0));
}

double SpaceModel::density(double t) const {
  double v = c_delta * std::pow(2.0 * std::sinh(t), m1);
  if (m2 > 0.0) v *= std::pow(2.0 * std::sinh(2.0 * t), m2);
  return v;
}

double SpaceModel::drift(double t) const {
  double v = m1 / std::tanh(t);
  if (m2 > 0.0) v += 2.0 * m2 / std::tanh(2.0 * t);
  return v;
}

SpaceModel jacobi(double m1, double m2) {
  SpaceModel X;
  X.rs = rank_one_roots(m1, m2);
  X.wg = weyl_group(X.rs);
  X.kind = SpaceKind::Jacobi;
  X.m1 = m1;
  X.m2 = m2;
  X.n = int(std::lround(m1 + m2 + 1.0));
  X.rho = X.rs.rho[0];
  X.alpha_j = 0.5 * (m1 + m2 - 1.0);
  X.beta_j = 0.5 * (m2 - 1.0);
  X.c_delta = sphere_area(m1 + m2) / (std::pow(2.0, m1) * std::pow(4.0, m2));
  X.k_space = 1.0 / (2.0 * std::numbers::pi * X.c_delta);
  X.omega_bound = m2 > 0.0 ? std::numbers::pi / 4.0 : std::numbers::pi / 2.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "jacobi(%g,%g)", m1, m2);
  X.name = buf;
  return X;
}

SpaceModel hyperbolic(int n) {
  if (n < 2) throw DomainError("hyperbolic(n) needs n >= 2");
  SpaceModel X = jacobi(n - 1.0, 0.0);
  X.kind = SpaceKind::Hyperbolic;
  X.name = "hyperbolic(" + std::to_string(n) + ")";
  return X;
}

SpaceModel complex_a1() {
  SpaceModel X = jacobi(2.0, 0.0);
  X.kind = SpaceKind::ComplexA1;
  X.name = "complex_a1";
  return X;
}

SpaceModel build_space(const std::string& spec) {
  static const std::regex hyp(R"(\s*hyperbolic\s*\(\s*(\d+)\s*\)\s*)");
  static const std::regex jac(
      R"(\s*jacobi\s*\(\s*([0-9.eE+-]+)\s*,\s*([0-9.eE+-]+)\s*\)\s*)");
  static const std::regex cpx(R"(\s*complex_a1\s*)");
  std::smatch m;
  if (std::regex_match(spec, m, hyp)) return hyperbolic(std::stoi(m[1]));
  if (std::regex_match(spec, m, jac)) return jacobi(std::stod(m[1]), std::stod(m[2]));
  if (std::regex_match(spec, m, cpx)) return complex_a1();
  throw ConfigError("unknown space '" + spec + "'; expected hyperbolic(n), jacobi(m1,m2) or complex_a1");
}

bool in_omega(const RootSystem& rs, const Eigen::VectorXd& Y) {
  for (const auto& r : rs.positive_roots)
    if (!(std::abs(r.alpha.dot(Y)) < 0.5 * std::numbers::pi)) return false;
  return true;
}

Eigen::VectorXd dominant_rep(const RootSystem& rs, const Eigen::VectorXd& Y) {
  Eigen::VectorXd Z = Y;
  for (int it = 0; it < 64; ++it) {
    bool moved = false;
    for (const auto& a : rs.simple_roots)
      if (a.dot(Z) < 0.0) {
        Z = rs.reflect(a, Z);
        moved = true;
      }
    if (!moved) return Z;
  }
  throw ConvergenceError("dominant_rep did not terminate");
}

bool in_conv_weyl_orbit(const RootSystem& rs, const WeylGroup&, const Eigen::VectorXd& Z,
                        const Eigen::VectorXd& Y, double slack) {
  const Eigen::VectorXd d = dominant_rep(rs, Y) - dominant_rep(rs, Z);
  Eigen::MatrixXd basis(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i) basis.col(i) = rs.dual(rs.simple_roots[i]);
  const Eigen::VectorXd c = basis.fullPivLu().solve(d);
  return c.minCoeff() >= -slack;
}

double omega_weight(const RootSystem&, const WeylGroup& wg, const Eigen::VectorXd& nu,
                    const Eigen::VectorXd& Y) {
  double s = 0.0;
  for (const auto& w : wg.elements) s += std::exp(2.0 * nu.dot(w * Y));
  return s / double(wg.order());
}

std::vector<Eigen::VectorXd> omega_vertices(const RootSystem& rs) {
  const double b = 0.5 * std::numbers::pi;
  std::vector<Eigen::VectorXd> out;
  const auto& pr = rs.positive_roots;
  if (rs.rank == 1) {
    double amax = 0.0;
    for (const auto& r : pr) amax = std::max(amax, std::abs(r.alpha[0]));
    out.push_back(Eigen::VectorXd::Constant(1, b / amax));
    out.push_back(Eigen::VectorXd::Constant(1, -b / amax));
    return out;
  }
  for (std::size_t i = 0; i < pr.size(); ++i)
    for (std::size_t j = i + 1; j < pr.size(); ++j)
      for (int si : {-1, 1})
        for (int sj : {-1, 1}) {
          Eigen::Matrix2d A;
          A.row(0) = pr[i].alpha.transpose();
          A.row(1) = pr[j].alpha.transpose();
          if (std::abs(A.determinant()) < 1e-12) continue;
          const Eigen::VectorXd v = A.inverse() * Eigen::Vector2d(si * b, sj * b);
          bool ok = true;
          for (const auto& r : pr)
            if (std::abs(r.alpha.dot(v)) > b * (1.0 + 1e-12)) ok = false;
          if (ok) out.push_back(v);
        }
  return out;
}

double omega_sup(const RootSystem& rs, const WeylGroup& wg, const Eigen::VectorXd& nu) {
  double best = 1.0;
  for (const auto& v : omega_vertices(rs)) best = std::max(best, omega_weight(rs, wg, nu, v));
  return best;
}

double omega_weight(const SpaceModel&, double nu, double y) { return std::cosh(2.0 * nu * y); }

double omega_sup(const SpaceModel& X, double nu) { return std::cosh(2.0 * nu * X.omega_bound); }

}  // namespace symspace
