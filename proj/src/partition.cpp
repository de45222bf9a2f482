#include "duality/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace duality {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
  if (parts_.empty()) return Partition();
  std::vector<int> cols(static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++cols[static_cast<size_t>(j)];
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void emit_partitions(int remaining, int max_part, int parts_left,
                     std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  if (parts_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    emit_partitions(remaining - p, p, parts_left - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, int max_parts) {
  if (d < 0) throw std::invalid_argument("enumerate_partitions: d < 0");
  std::vector<Partition> out;
  std::vector<int> acc;
  emit_partitions(d, d == 0 ? 1 : d, max_parts, acc, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int d) {
  return enumerate_partitions(d, d);
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance_leq: sizes differ");
  int n = std::max(a.length(), b.length());
  long sa = 0, sb = 0;
  for (int i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

Partition partition_from_content(const std::vector<int>& content) {
  std::vector<int> v;
  for (int c : content) {
    if (c < 0)
      throw std::invalid_argument("partition_from_content: negative entry");
    if (c > 0) v.push_back(c);
  }
  std::sort(v.rbegin(), v.rend());
  return Partition(std::move(v));
}

}  // namespace duality
