#include "symspace/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "symspace/error.hpp"

namespace symspace {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lgamma_right(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(x);
}

}  // namespace

bool is_nonpositive_integer(cplx z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  if (z.real() > tol) return false;
  return std::abs(z.real() - std::round(z.real())) <= tol;
}

cplx lgamma(cplx z) {
  if (is_nonpositive_integer(z))
    throw SingularValueError("Gamma pole at z = " + std::to_string(z.real()));
  if (z.real() < 0.5) {
    const double pi = std::numbers::pi;
    return std::log(pi) - std::log(std::sin(pi * z)) - lgamma_right(1.0 - z);
  }
  return lgamma_right(z);
}

cplx gamma(cplx z) { return std::exp(lgamma(z)); }

cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-lgamma(z));
}

Hyp2f1 hyp2f1(cplx a, cplx b, cplx c, cplx z, int max_terms) {
  if (std::abs(z) >= 1.0) throw DomainError("hyp2f1 series needs |z| < 1");
  if (is_nonpositive_integer(c)) throw SingularValueError("hyp2f1: c is a non-positive integer");
  cplx term = 1.0, sum = 1.0, dsum = 0.0;
  int small = 0;
  for (int k = 0; k < max_terms; ++k) {
    const double kk = k;
    const cplx ratio = (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0));
    // derivative term: (k+1) t_{k+1} z^k with t_{k+1} z^{k+1} = term * ratio * z
    dsum += term * ratio * (kk + 1.0);
    term *= ratio * z;
    sum += term;
    const double mag = std::abs(term);
    if (mag <= 1e-17 * std::abs(sum) || mag == 0.0) {
      if (++small >= 3 || mag == 0.0) return {sum, dsum, k + 1};
    } else {
      small = 0;
    }
  }
  throw ConvergenceError("hyp2f1 series did not converge");
}

}  // namespace symspace
