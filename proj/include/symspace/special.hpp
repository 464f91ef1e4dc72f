#pragma once

#include <complex>

namespace symspace {

using cplx = std::complex<double>;

// Complex log-Gamma (Lanczos, g = 7, 9 terms) with reflection for Re z < 1/2.
// The imaginary part is only defined modulo 2*pi.
cplx lgamma(cplx z);
cplx gamma(cplx z);
// 1/Gamma(z), entire; exact zero at the non-positive integers.
cplx rgamma(cplx z);

bool is_nonpositive_integer(cplx z, double tol = 1e-13);

struct Hyp2f1 {
  cplx value;
  cplx derivative;  // d/dz
  int terms;
};

// Gauss series 2F1(a,b;c;z) for |z| < 1.
Hyp2f1 hyp2f1(cplx a, cplx b, cplx c, cplx z, int max_terms = 200000);

}  // namespace symspace
