#include "symspace/grids.hpp"

#include <algorithm>
#include <cmath>

#include "symspace/error.hpp"

namespace symspace {

PanelGrid make_panel_grid(double lo, double hi, double width, int per_panel) {
  if (!(hi > lo) || !(width > 0.0) || per_panel < 2) throw ConfigError("invalid panel grid");
  PanelGrid g;
  g.lo = lo;
  g.hi = hi;
  g.panels = std::max(1, int(std::ceil((hi - lo) / width - 1e-12)));
  g.per_panel = per_panel;
  g.rule = panels(lo, hi, (hi - lo) / g.panels, per_panel);
  return g;
}

cplx PanelGrid::interpolate(const std::vector<cplx>& values, double x) const {
  if (values.size() != size()) throw InconsistentInputError("interpolate: value count mismatch");
  const double w = width();
  int p = int(std::floor((x - lo) / w));
  p = std::clamp(p, 0, panels - 1);
  const std::size_t off = std::size_t(p) * per_panel;
  // Barycentric weights for Gauss nodes: (-1)^j sqrt((1-x_j^2) w_j).
  const Rule base = gauss_legendre(per_panel);
  const double mid = lo + (p + 0.5) * w, half = 0.5 * w;
  const double u = (x - mid) / half;
  cplx num = 0.0;
  double den = 0.0;
  for (int j = 0; j < per_panel; ++j) {
    const double bw = ((j % 2) ? -1.0 : 1.0) * std::sqrt((1.0 - base.x[j] * base.x[j]) * base.w[j]);
    const double d = u - base.x[j];
    if (d == 0.0) return values[off + j];
    num += bw / d * values[off + j];
    den += bw / d;
  }
  return num / den;
}

cplx RadialFunction::operator()(double t) const {
  t = std::abs(t);
  if (t > grid->hi) return 0.0;
  return grid->interpolate(values, t);
}

bool RadialFunction::compact() const {
  double mx = 0.0;
  for (const auto& v : values) mx = std::max(mx, std::abs(v));
  const std::size_t k = std::size_t(grid->per_panel);
  for (std::size_t i = values.size() - k; i < values.size(); ++i)
    if (std::abs(values[i]) > 1e-14 * mx) return false;
  return true;
}

}  // namespace symspace
