#pragma once

#include <memory>
#include <vector>

#include "symspace/quadrature.hpp"
#include "symspace/special.hpp"

namespace symspace {

// Gauss-Legendre panels of equal width on [lo, hi].
struct PanelGrid {
  double lo = 0.0, hi = 0.0;
  int panels = 0;
  int per_panel = 0;
  Rule rule;

  double width() const { return (hi - lo) / panels; }
  std::size_t size() const { return rule.size(); }
  // Barycentric Lagrange interpolation of nodal values inside the panel containing x.
  cplx interpolate(const std::vector<cplx>& values, double x) const;
};

PanelGrid make_panel_grid(double lo, double hi, double width, int per_panel);

using RadialGrid = PanelGrid;    // t in [0, t_max]
using SpectralGrid = PanelGrid;  // nu in [0, nu_max]

struct RadialFunction {
  std::shared_ptr<const RadialGrid> grid;
  std::vector<cplx> values;

  // Even extension; zero beyond t_max (compact support on the grid).
  cplx operator()(double t) const;
  bool compact() const;  // trailing samples vanish to 1e-14 of the maximum
};

enum class SpectralMeasure { Plancherel, Heat, Omega };

struct SpectralFunction {
  std::shared_ptr<const SpectralGrid> grid;
  std::vector<cplx> values;
  SpectralMeasure measure = SpectralMeasure::Plancherel;
  double t = 0.0;  // time parameter of the heat-weighted measure
};

}  // namespace symspace
