#pragma once

#include "yfp/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace yfp {

/// Purely atomic measure with exact rational data. Weights may be signed
/// (Rayleigh measures); transition measures keep them positive.
struct ExactMeasure {
  struct Atom {
    Rational x;
    Rational w;
  };
  std::vector<Atom> atoms;

  Rational total_mass() const;
  /// Power moment sum(w * x^k); k = 0 gives the mass.
  Rational moment(int k) const;
};

/// Edge behaviour of a closed-form density on [a, b]:
///   InverseSqrt:  f(x) = s(x) / sqrt((x-a)(b-x))   (Rayleigh-type edges)
///   Sqrt:         f(x) = s(x) * sqrt((x-a)(b-x))   (transition-type edges)
/// with s analytic on the closed interval. Integrals against such densities
/// use the substitution x = (a+b)/2 + (b-a)/2 sin(theta), which removes the
/// edge singularity exactly.
enum class EdgeKind { InverseSqrt, Sqrt };

struct AnalyticDensity {
  double a = 0;
  double b = 0;
  EdgeKind kind = EdgeKind::Sqrt;
  std::function<double(double)> smooth; // s(x) above
  double eval(double x) const;
};

/// Uniform grid samples of a density on [u0, u0 + du*(n-1)].
struct DensityGrid {
  double u0 = 0;
  double du = 0;
  std::vector<double> values;
  int n() const { return static_cast<int>(values.size()); }
  double node(int i) const { return u0 + i * du; }
};

/// Compactly supported measure in numeric form: atoms plus an optional
/// density. Densities produced in closed form carry an analytic evaluator
/// next to their grid samples; only the grid is serialized.
struct Measure {
  std::vector<std::pair<double, double>> atoms; // (location, weight)
  std::optional<DensityGrid> density;
  std::optional<AnalyticDensity> analytic; // same density, closed form
  bool coarse_grid_warning = false;

  double atom_mass() const;
  double total_mass() const;
  double moment(int k) const;
  /// Integral of f against the measure (atoms + density). Uses the analytic
  /// form with edge-aware quadrature when available; `kinks` lists points
  /// where f is continuous but not smooth.
  double integrate(const std::function<double(double)>& f,
                   const std::vector<double>& kinks = {}) const;
};

Measure to_numeric(const ExactMeasure& m);

/// Samples an analytic density onto n uniform nodes spanning its support.
DensityGrid sample_density(const AnalyticDensity& d, int n);

/// Integral of f(x) * w(x) dx on [a, b], where w is the edge weight of
/// `kind` and f is smooth except at the listed kinks. Gauss-Legendre panels
/// in the angular variable; accuracy is close to machine precision for
/// analytic f.
double edge_weighted_integral(const std::function<double(double)>& f, double a, double b,
                              EdgeKind kind, std::vector<double> kinks = {},
                              int nodes_per_panel = 96);

/// Plain Gauss-Legendre on [a, b] (no edge weight), split at kinks.
double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                      std::vector<double> kinks = {}, int nodes_per_panel = 96);

} // namespace yfp
