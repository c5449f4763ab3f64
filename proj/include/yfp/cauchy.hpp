#pragma once

#include "yfp/measure.hpp"
#include "yfp/profile.hpp"

#include <complex>
#include <functional>

namespace yfp {

using Complex = std::complex<double>;
using CauchyFn = std::function<Complex(Complex)>;

/// sqrt on C \ [0, inf) with positive imaginary part; on the cut itself the
/// limit from the upper half plane (the positive root) is returned.
Complex sqrt_upper(Complex w);

/// G(z) = int 1/(z-x) dm(x). Valid for any z off the support; a real z on
/// the support raises a pole error. Near-axis evaluations of densities are
/// handled by adaptive panels, so Im z may be arbitrarily small.
Complex cauchy_transform(const Measure& m, Complex z);

/// G and dG/dz in one pass (analytic differentiation).
struct CauchyPair {
  Complex g;
  Complex dg;
};
CauchyPair cauchy_transform_with_derivative(const Measure& m, Complex z);

/// Cauchy transform of the measure with free cumulants (0, 1, c, c^2, ...):
/// (z + c - sqrt((z-c)^2 - 4)) / (2(1+cz)), branch with Im sqrt > 0.
/// c = 0 gives the standard semicircle transform.
Complex cauchy_geometric_family(double c, Complex z);

/// Forward direction of the diagram/measure correspondence: the Cauchy
/// transform of the transition measure, (1/z) exp(int sigma'(x)/(x-z) dx),
/// as a closed-form log sum over the profile's linear segments.
CauchyFn transition_cauchy_of_profile(const ContinuousDiagram& w);

/// Moments m_1..m_n of the measure behind G via the contour integral
/// (1/2 pi i) oint z^k G(z) dz on |z| = radius (radius must clear the
/// support). Trapezoid in angle; exponentially accurate.
std::vector<double> moments_from_cauchy(const CauchyFn& G, double radius, int n,
                                        int nodes = 1024);

} // namespace yfp
