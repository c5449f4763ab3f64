#include "yfp/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace yfp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::optional<Partition> Partition::try_parse(std::string_view csv) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string_view tok = csv.substr(pos, comma == std::string_view::npos ? csv.npos : comma - pos);
    if (tok.empty()) return std::nullopt;
    int v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (parts_.empty()) return Partition();
  conj.resize(parts_[0]);
  for (int c = 0; c < parts_[0]; ++c) {
    int count = 0;
    for (int p : parts_)
      if (p > c) ++count;
    conj[c] = count;
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::vector<Partition> partitions_of(int q) {
  if (q < 0) throw std::invalid_argument("q must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Recursive descent, parts bounded above by the previous part.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, q, q);
  return out;
}

int hook_length(const Partition& p, int r, int c) {
  const auto& parts = p.parts();
  int arm = parts[r] - c - 1;
  int leg = 0;
  for (std::size_t i = r + 1; i < parts.size(); ++i)
    if (parts[i] > c) ++leg;
  return arm + leg + 1;
}

BigInt dim_irrep(const Partition& p) {
  BigInt num = factorial(static_cast<unsigned>(p.size()));
  BigInt hooks = 1;
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.parts()[r]; ++c) hooks *= hook_length(p, r, c);
  return num / hooks;
}

Rational gl_dimension(const Partition& p, int N) {
  if (p.rows() > N) return Rational(0);
  Rational d = 1;
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < p.parts()[r]; ++c)
      d *= Rational(N + c - r, hook_length(p, r, c));
  return d;
}

std::size_t PartitionHash::operator()(const Partition& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.parts()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace yfp
