#include "yfp/transition.hpp"

#include <cmath>
#include <stdexcept>

namespace yfp {

ExactMeasure transition_of_coords(const InterlacingCoords& c) {
  if (!is_valid_interlacing(c)) throw std::invalid_argument("invalid interlacing coordinates");
  ExactMeasure m;
  const auto& xs = c.minima;
  const auto& ys = c.maxima;
  m.atoms.reserve(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Rational w = 1;
    for (long long y : ys) w *= Rational(xs[k] - y);
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (i != k) w /= Rational(xs[k] - xs[i]);
    m.atoms.push_back({Rational(xs[k]), w});
  }
  return m;
}

std::vector<Rational> moments_of_measure(const ExactMeasure& m, int n) {
  std::vector<Rational> out;
  out.reserve(n);
  // Incremental powers per atom keep this O(n * atoms).
  std::vector<Rational> pow(m.atoms.size(), Rational(1));
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (std::size_t i = 0; i < m.atoms.size(); ++i) {
      pow[i] *= m.atoms[i].x;
      s += m.atoms[i].w * pow[i];
    }
    out.push_back(s);
  }
  return out;
}

std::vector<std::pair<double, double>> transition_atoms_fast(const InterlacingCoords& c) {
  const auto& xs = c.minima;
  const auto& ys = c.maxima;
  std::vector<std::pair<double, double>> atoms(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    double lg = 0;
    for (long long y : ys) lg += std::log(static_cast<double>(std::llabs(xs[k] - y)));
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (i != k) lg -= std::log(static_cast<double>(std::llabs(xs[k] - xs[i])));
    // Signs cancel: numerator and denominator have the same number of
    // negative factors (interlacing), so the weight is positive.
    atoms[k] = {static_cast<double>(xs[k]), std::exp(lg)};
  }
  return atoms;
}

} // namespace yfp
