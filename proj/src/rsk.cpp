#include "duality/rsk.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace duality {

CompositionMatrix::CompositionMatrix(int n, int m) : n_(n), m_(m) {
  if (n <= 0 || m <= 0)
    throw std::invalid_argument("CompositionMatrix: dimensions must be positive");
  a_.assign(static_cast<size_t>(n) * static_cast<size_t>(m), 0);
}

CompositionMatrix::CompositionMatrix(int n, int m,
                                     std::vector<std::vector<int>> entries)
    : CompositionMatrix(n, m) {
  if (static_cast<int>(entries.size()) != n)
    throw std::invalid_argument("CompositionMatrix: wrong row count");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[static_cast<size_t>(i)].size()) != m)
      throw std::invalid_argument("CompositionMatrix: ragged rows");
    for (int j = 0; j < m; ++j) {
      int v = entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (v < 0) throw std::invalid_argument("CompositionMatrix: negative entry");
      at(i, j) = v;
    }
  }
}

int CompositionMatrix::total() const {
  return std::accumulate(a_.begin(), a_.end(), 0);
}

std::vector<int> CompositionMatrix::row_sums() const {
  std::vector<int> r(static_cast<size_t>(n_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < m_; ++j) r[static_cast<size_t>(i)] += at(i, j);
  return r;
}

std::vector<int> CompositionMatrix::col_sums() const {
  std::vector<int> c(static_cast<size_t>(m_), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < m_; ++j) c[static_cast<size_t>(j)] += at(i, j);
  return c;
}

CompositionMatrix CompositionMatrix::transpose() const {
  CompositionMatrix t(m_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < m_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::string CompositionMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < m_; ++j) {
      if (j) s += ",";
      s += std::to_string(at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

namespace {

void emit_matrices(CompositionMatrix& a, int cell, int remaining,
                   std::vector<CompositionMatrix>& out) {
  int cells = a.rows() * a.cols();
  if (cell == cells - 1) {
    a.at(cell / a.cols(), cell % a.cols()) = remaining;
    out.push_back(a);
    a.at(cell / a.cols(), cell % a.cols()) = 0;
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    a.at(cell / a.cols(), cell % a.cols()) = v;
    emit_matrices(a, cell + 1, remaining - v, out);
  }
  a.at(cell / a.cols(), cell % a.cols()) = 0;
}

}  // namespace

std::vector<CompositionMatrix> enumerate_composition_matrices(int n, int m,
                                                              int d) {
  if (d < 0) throw std::invalid_argument("enumerate_composition_matrices: d < 0");
  CompositionMatrix a(n, m);
  std::vector<CompositionMatrix> out;
  if (n * m == 1) {
    a.at(0, 0) = d;
    out.push_back(a);
    return out;
  }
  emit_matrices(a, 0, d, out);
  return out;
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size(), false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("Permutation: word is not a rearrangement of 1..d");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> w(static_cast<size_t>(d));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (int x = 1; x <= degree(); ++x)
    w[static_cast<size_t>((*this)(x)-1)] = x;
  return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("Permutation::compose: degree mismatch");
  std::vector<int> w(word_.size());
  for (int x = 1; x <= degree(); ++x) w[static_cast<size_t>(x - 1)] = (*this)(other(x));
  return Permutation(std::move(w));
}

CycleType cycle_type(const Permutation& w) {
  int d = w.degree();
  std::vector<bool> seen(static_cast<size_t>(d), false);
  std::vector<int> lens;
  for (int s = 1; s <= d; ++s) {
    if (seen[static_cast<size_t>(s - 1)]) continue;
    int len = 0, x = s;
    while (!seen[static_cast<size_t>(x - 1)]) {
      seen[static_cast<size_t>(x - 1)] = true;
      x = w(x);
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return CycleType(std::move(lens));
}

namespace {

// Insert x into rows by row bumping; returns the (row, col) of the new cell.
std::pair<int, int> row_insert(std::vector<std::vector<int>>& rows, int x) {
  for (size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({x});
      return {static_cast<int>(r), 0};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {static_cast<int>(r), static_cast<int>(row.size()) - 1};
    }
    std::swap(*it, x);
  }
}

}  // namespace

std::pair<Tableau, Tableau> rsk(const CompositionMatrix& A) {
  std::vector<std::vector<int>> p, q;
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) {
      for (int rep = 0; rep < A.at(i, j); ++rep) {
        auto [r, c] = row_insert(p, j + 1);
        if (r == static_cast<int>(q.size())) q.emplace_back();
        q[static_cast<size_t>(r)].push_back(i + 1);
        (void)c;
      }
    }
  }
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

CompositionMatrix inverse_rsk(const Tableau& P, const Tableau& Q, int rows,
                              int cols) {
  if (P.shape() != Q.shape())
    throw std::invalid_argument("inverse_rsk: shape mismatch");
  auto p = P.rows();
  auto q = Q.rows();
  int n = rows, m = cols;
  for (const auto& row : q)
    for (int e : row) n = std::max(n, e);
  for (const auto& row : p)
    for (int e : row) m = std::max(m, e);
  if (P.size() == 0) {
    if (n <= 0 || m <= 0)
      throw std::invalid_argument("inverse_rsk: dimensions required for empty tableaux");
    return CompositionMatrix(n, m);
  }
  CompositionMatrix A(n, m);
  int remaining = P.size();
  while (remaining > 0) {
    // Largest Q-entry; among equals they form a horizontal strip, take the
    // rightmost cell (largest column) first.
    int best_r = -1, best_c = -1, best_v = 0;
    for (size_t r = 0; r < q.size(); ++r) {
      if (q[r].empty()) continue;
      int c = static_cast<int>(q[r].size()) - 1;
      int v = q[r][static_cast<size_t>(c)];
      if (v > best_v || (v == best_v && c > best_c)) {
        best_v = v;
        best_r = static_cast<int>(r);
        best_c = c;
      }
    }
    int i = best_v;
    q[static_cast<size_t>(best_r)].pop_back();
    int y = p[static_cast<size_t>(best_r)].back();
    p[static_cast<size_t>(best_r)].pop_back();
    for (int r = best_r - 1; r >= 0; --r) {
      auto& row = p[static_cast<size_t>(r)];
      // Rightmost entry strictly smaller than y is the one that bumped it.
      auto it = std::lower_bound(row.begin(), row.end(), y);
      if (it == row.begin())
        throw std::logic_error("inverse_rsk: reverse bump failed");
      --it;
      std::swap(*it, y);
    }
    A.at(i - 1, y - 1) += 1;
    --remaining;
  }
  return A;
}

Partition rs_shape(const Permutation& w) {
  std::vector<std::vector<int>> p;
  for (int x : w.word()) row_insert(p, x);
  std::vector<int> lens;
  for (const auto& row : p) lens.push_back(static_cast<int>(row.size()));
  return Partition(std::move(lens));
}

int lds(const Permutation& w) {
  const auto& v = w.word();
  int d = w.degree();
  int best = 0;
  std::vector<int> dp(static_cast<size_t>(d), 1);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < i; ++j)
      if (v[static_cast<size_t>(j)] > v[static_cast<size_t>(i)])
        dp[static_cast<size_t>(i)] =
            std::max(dp[static_cast<size_t>(i)], dp[static_cast<size_t>(j)] + 1);
    best = std::max(best, dp[static_cast<size_t>(i)]);
  }
  return d == 0 ? 0 : best;
}

}  // namespace duality
