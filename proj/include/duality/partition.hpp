#pragma once

#include <compare>
#include <string>
#include <vector>

#include "duality/arith.hpp"

namespace duality {

/// Integer partition: weakly decreasing positive parts, stored without
/// trailing zeros so that equal partitions compare equal as data.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// d, the sum of the parts.
  int size() const { return size_; }
  /// Number of (positive) parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// Zero-padded access: parts beyond length() read as 0.
  int operator[](int i) const {
    return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  /// Column lengths of the Young diagram.
  Partition transpose() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

  std::string to_string() const;  // "(3,1)"; "()" for the empty partition

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A partition of d read as the cycle lengths of a conjugacy class of S_d.
using CycleType = Partition;

/// All partitions of d, reverse-lexicographic order: (d) first, (1,...,1)
/// last.  d = 0 yields the single empty partition.
std::vector<Partition> enumerate_partitions(int d);

/// Same, restricted to partitions with at most max_parts parts.
std::vector<Partition> enumerate_partitions(int d, int max_parts);

/// Dominance order: true iff every partial sum of a is <= that of b
/// (zero-padded).  Both must partition the same d.
bool dominance_leq(const Partition& a, const Partition& b);

/// Sort a content vector decreasingly and strip zeros.  Entries must be
/// non-negative.
Partition partition_from_content(const std::vector<int>& content);

}  // namespace duality
