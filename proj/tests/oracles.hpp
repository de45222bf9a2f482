// Test-only brute-force oracles, kept independent of the library paths they
// check.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "duality/arith.hpp"

namespace oracles {

/// All weakly decreasing positive sequences summing to d with at most
/// max_parts entries, by filtering every composition of d.
inline std::set<std::vector<int>> brute_partitions(int d, int max_parts) {
  std::set<std::vector<int>> out;
  std::vector<int> comp;
  // Enumerate compositions (ordered tuples of positive parts).
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      bool sorted = std::is_sorted(comp.rbegin(), comp.rend());
      if (sorted && static_cast<int>(comp.size()) <= max_parts) out.insert(comp);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      comp.push_back(p);
      self(self, remaining - p);
      comp.pop_back();
    }
  };
  if (d == 0) {
    out.insert(std::vector<int>{});
    return out;
  }
  rec(rec, d);
  return out;
}

/// Partition counting function via the Euler pentagonal recurrence.
inline duality::Int euler_partition_count(int n) {
  std::vector<duality::Int> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    duality::Int total = 0;
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
      if (g1 > i && g2 > i) break;
      int sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= i) total += sign * p[static_cast<size_t>(i - g1)];
      if (g2 <= i) total += sign * p[static_cast<size_t>(i - g2)];
    }
    p[static_cast<size_t>(i)] = total;
  }
  return p[static_cast<size_t>(n)];
}

/// Longest strictly decreasing subsequence by enumerating all subsets.
inline int brute_lds(const std::vector<int>& w) {
  int d = static_cast<int>(w.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < d; ++i)
      if (mask & (1u << i)) sub.push_back(w[static_cast<size_t>(i)]);
    if (std::is_sorted(sub.begin(), sub.end(),
                       [](int a, int b) { return a > b; }) &&
        std::adjacent_find(sub.begin(), sub.end(),
                           [](int a, int b) { return a <= b; }) == sub.end())
      best = std::max(best, static_cast<int>(sub.size()));
  }
  return best;
}

/// Longest strictly increasing subsequence, same method.
inline int brute_lis(const std::vector<int>& w) {
  int d = static_cast<int>(w.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < d; ++i)
      if (mask & (1u << i)) sub.push_back(w[static_cast<size_t>(i)]);
    bool strict = true;
    for (size_t i = 1; i < sub.size(); ++i)
      if (sub[i] <= sub[i - 1]) strict = false;
    if (strict) best = std::max(best, static_cast<int>(sub.size()));
  }
  return best;
}

/// Semistandard fillings of a shape counted by checking every assignment of
/// values 1..max_entry to the cells.
inline long brute_ssyt_count(const std::vector<int>& shape, int max_entry) {
  int cells = 0;
  for (int r : shape) cells += r;
  long count = 0;
  std::vector<int> fill(static_cast<size_t>(cells), 1);
  for (;;) {
    // Check semistandardness of this assignment, row-major layout.
    bool ok = true;
    int pos = 0;
    std::vector<std::vector<int>> rows;
    for (int len : shape) {
      rows.emplace_back(fill.begin() + pos, fill.begin() + pos + len);
      pos += len;
    }
    for (size_t r = 0; r < rows.size() && ok; ++r) {
      for (size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c > 0 && rows[r][c] < rows[r][c - 1]) ok = false;
        if (r > 0 && rows[r][c] <= rows[r - 1][c]) ok = false;
      }
    }
    if (ok) ++count;
    int i = cells - 1;
    while (i >= 0 && fill[static_cast<size_t>(i)] == max_entry) {
      fill[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++fill[static_cast<size_t>(i)];
  }
  return count;
}

}  // namespace oracles
