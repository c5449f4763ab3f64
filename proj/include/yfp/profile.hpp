#pragma once

#include "yfp/interlacing.hpp"
#include "yfp/rational.hpp"

#include <optional>
#include <vector>

namespace yfp {

/// Uniform samples of a function on [u0, u0 + du*(n-1)].
struct GridFunction {
  double u0 = 0;
  double du = 0;
  std::vector<double> values;

  int n() const { return static_cast<int>(values.size()); }
  double u_back() const { return u0 + du * (n() - 1); }
  double at(int i) const { return values[i]; }
  /// Linear interpolation inside the grid; callers handle the outside.
  double interpolate(double u) const;
};

/// A continuous Young diagram: a 1-Lipschitz function with omega(u) = |u|
/// outside a compact interval. Stored either as exact breakpoints of a
/// piecewise linear profile or as uniform grid samples. Conversion
/// breakpoints -> grid is available; the reverse is not.
class ContinuousDiagram {
public:
  /// Breakpoint form. Points are (u, omega(u)) with strictly increasing u;
  /// omega continues as |u| outside. Validates Lipschitz-1 and the |u| match
  /// at both ends.
  static ContinuousDiagram from_breakpoints(std::vector<std::pair<double, double>> pts);
  /// Grid form; omega(u) = |u| outside the sampled range.
  static ContinuousDiagram from_grid(GridFunction g);
  /// The profile |u| (empty diagram).
  static ContinuousDiagram abs_profile();

  double omega(double u) const;
  double operator()(double u) const { return omega(u); }
  double sigma(double u) const { return (omega(u) - std::abs(u)) / 2.0; }

  bool has_breakpoints() const { return !pts_.empty(); }
  const std::vector<std::pair<double, double>>& breakpoints() const { return pts_; }
  bool has_grid() const { return grid_.has_value(); }
  const GridFunction& grid() const { return *grid_; }

  /// Support bound b: omega(u) = |u| for |u| >= b.
  double support_bound() const;

  /// Lossless resampling of a breakpoint profile onto a uniform grid
  /// (breakpoint values are reproduced only up to the grid resolution).
  ContinuousDiagram to_grid(int n_points) const;

private:
  std::vector<std::pair<double, double>> pts_;
  std::optional<GridFunction> grid_;
};

/// Piecewise linear profile of interlacing coordinates: slope -1/+1 valleys
/// at the minima, peaks at the maxima. Rejects non-interlacing input.
ContinuousDiagram coords_to_profile(const InterlacingCoords& c);

/// The scaling map omega -> q^{-1/2} omega(q^{1/2} u).
ContinuousDiagram rescale(const ContinuousDiagram& w, long long q);

/// sup_u |a(u) - b(u)| over the union of supports, evaluated on the common
/// refinement of breakpoints and grids (exact for two breakpoint profiles).
double sup_distance(const ContinuousDiagram& a, const ContinuousDiagram& b);

/// Half the area between omega and |u|; equals the second moment of the
/// transition measure. Exact (as a dyadic double) on breakpoint profiles.
double area_second_moment(const ContinuousDiagram& w);

/// Rational-arithmetic version for breakpoint profiles with dyadic nodes.
Rational area_second_moment_exact(const ContinuousDiagram& w);

} // namespace yfp
