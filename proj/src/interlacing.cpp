#include "yfp/interlacing.hpp"

namespace yfp {

bool is_valid_interlacing(const InterlacingCoords& c) {
  if (c.minima.empty()) return false;
  if (c.maxima.size() + 1 != c.minima.size()) return false;
  for (std::size_t i = 0; i < c.maxima.size(); ++i) {
    if (!(c.minima[i] < c.maxima[i] && c.maxima[i] < c.minima[i + 1])) return false;
  }
  long long s = 0;
  for (long long x : c.minima) s += x;
  for (long long y : c.maxima) s -= y;
  return s == 0;
}

InterlacingCoords partition_to_coords(const Partition& p) {
  InterlacingCoords c;
  const auto& parts = p.parts();
  const int k = p.rows();
  // Walk rows bottom-up, so contents come out ascending. A removable corner
  // sits at the last row of each block of equal parts (content part-row-1),
  // an addable corner at the first row of each block (content part-row).
  c.minima.push_back(-k); // addable cell below the last row
  for (int r = k - 1; r >= 0; --r) {
    const bool last_of_block = (r == k - 1) || parts[r] > parts[r + 1];
    const bool first_of_block = (r == 0) || parts[r - 1] > parts[r];
    if (last_of_block) c.maxima.push_back(static_cast<long long>(parts[r]) - r - 1);
    if (first_of_block) c.minima.push_back(static_cast<long long>(parts[r]) - r);
  }
  return c;
}

} // namespace yfp
