#pragma once

#include "yfp/partition.hpp"

#include <vector>

namespace yfp {

/// Local minima / maxima of a diagram profile in content coordinates:
/// x_1 < y_1 < x_2 < ... < y_{n-1} < x_n with sum(x) - sum(y) = 0.
struct InterlacingCoords {
  std::vector<long long> minima;
  std::vector<long long> maxima;

  bool operator==(const InterlacingCoords&) const = default;
};

/// True when the interlacing and centering invariants hold.
bool is_valid_interlacing(const InterlacingCoords& c);

/// Minima at addable-corner contents, maxima at removable-corner contents.
/// The empty partition maps to x = {0}.
InterlacingCoords partition_to_coords(const Partition& p);

} // namespace yfp
