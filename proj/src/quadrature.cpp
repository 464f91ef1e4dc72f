#include "symspace/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "symspace/error.hpp"

namespace symspace {

namespace {

Rule compute_gl(int n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.x[n / 2] = 0.0;
  return r;
}

}  // namespace

Rule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be positive");
  if (n == 1) return Rule{{0.0}, {2.0}};
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  return cache.emplace(n, compute_gl(n)).first->second;
}

Rule composite_gl(const std::vector<double>& breaks, int n_per_panel) {
  const Rule base = gauss_legendre(n_per_panel);
  Rule r;
  for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
    const double a = breaks[p], b = breaks[p + 1];
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < base.size(); ++i) {
      r.x.push_back(mid + half * base.x[i]);
      r.w.push_back(half * base.w[i]);
    }
  }
  return r;
}

std::vector<double> uniform_breaks(double a, double b, double width) {
  const int m = std::max(1, int(std::ceil((b - a) / width - 1e-12)));
  std::vector<double> br(m + 1);
  for (int i = 0; i <= m; ++i) br[i] = a + (b - a) * i / m;
  return br;
}

Rule panels(double a, double b, double width, int n_per_panel) {
  return composite_gl(uniform_breaks(a, b, width), n_per_panel);
}

Rule graded_toward_left(double a, double b, int levels, int n_per_panel) {
  std::vector<double> br{a};
  for (int k = levels; k >= 0; --k) br.push_back(a + (b - a) * std::ldexp(1.0, -k));
  return composite_gl(br, n_per_panel);
}

std::complex<double> integrate_doubling(const std::function<std::complex<double>(double)>& f, double a, double b,
                                        double tol, int start_panels, int max_doublings) {
  if (!(b > a)) return 0.0;
  auto eval = [&](int n, double& l1) {
    const Rule r = composite_gl(uniform_breaks(a, b, (b - a) / n), 16);
    std::complex<double> s = 0.0;
    l1 = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::complex<double> v = f(r.x[i]);
      s += r.w[i] * v;
      l1 += r.w[i] * std::abs(v);
    }
    return s;
  };
  int n = start_panels;
  double l1 = 0.0;
  std::complex<double> prev = eval(n, l1);
  for (int k = 0; k < max_doublings; ++k) {
    n *= 2;
    const std::complex<double> cur = eval(n, l1);
    if (std::abs(cur - prev) <= tol * l1) return cur;
    prev = cur;
  }
  throw ConvergenceError("integrate_doubling: no convergence");
}

}  // namespace symspace
