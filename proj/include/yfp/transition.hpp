#pragma once

#include "yfp/interlacing.hpp"
#include "yfp/measure.hpp"

#include <vector>

namespace yfp {

/// Transition measure of a rectangular-coordinate diagram: atoms at the
/// minima x_k with weights prod_j(x_k - y_j) / prod_{i != k}(x_k - x_i).
/// Exact rationals; weights are positive and sum to 1.
ExactMeasure transition_of_coords(const InterlacingCoords& c);

/// Exact moments m_1..m_n of an atomic measure.
std::vector<Rational> moments_of_measure(const ExactMeasure& m, int n);

/// Same atoms in double precision, safe for large coordinates: products are
/// accumulated in log space. For partitions of large q this is the sampler's
/// statistics path.
std::vector<std::pair<double, double>> transition_atoms_fast(const InterlacingCoords& c);

} // namespace yfp
