#pragma once

#include "yfp/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace yfp {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition (q = 0) is a valid value and serves as the recursion base case.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static std::optional<Partition> try_parse(std::string_view csv);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < rows() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  std::string to_string() const; // "4,2,1"; "" for the empty partition

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of q in lexicographically decreasing order of part lists.
std::vector<Partition> partitions_of(int q);

/// Number of standard Young tableaux of shape p, i.e. the dimension of the
/// irreducible S_q module labelled by p (hook length formula).
BigInt dim_irrep(const Partition& p);

/// Dimension of the GL_N irreducible with highest weight p: the hook content
/// product. Zero when p has more than N rows.
Rational gl_dimension(const Partition& p, int N);

/// Hook length of the cell (r, c), 0-indexed.
int hook_length(const Partition& p, int r, int c);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const;
};

} // namespace yfp
