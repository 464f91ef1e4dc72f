#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace symspace {

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
  std::size_t size() const { return x.size(); }
};

// n-point Gauss-Legendre rule on [-1, 1].
Rule gauss_legendre(int n);

// Gauss-Legendre panels between consecutive breakpoints.
Rule composite_gl(const std::vector<double>& breaks, int n_per_panel);

// Uniform panels of (at most) the given width on [a, b].
Rule panels(double a, double b, double width, int n_per_panel);

// Panels on [a, b] refined geometrically toward a: breakpoints
// a + (b-a) * 2^-k for k = 0..levels, plus [a, a + (b-a) 2^-levels].
Rule graded_toward_left(double a, double b, int levels, int n_per_panel);

// Composite 16-point Gauss-Legendre on [a, b], doubling the panel count until two
// successive values differ by at most tol times the integral of |f|.
std::complex<double> integrate_doubling(const std::function<std::complex<double>(double)>& f, double a, double b,
                                        double tol, int start_panels = 4, int max_doublings = 12);

// Uniform breakpoints helper.
std::vector<double> uniform_breaks(double a, double b, double width);

}  // namespace symspace
