#include "duality/tableau.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace duality {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw std::invalid_argument("Tableau: empty row");
    if (r > 0 && row.size() > rows_[r - 1].size())
      throw std::invalid_argument("Tableau: row lengths must weakly decrease");
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] <= 0) throw std::invalid_argument("Tableau: entries must be positive");
      if (c > 0 && row[c] < row[c - 1])
        throw std::invalid_argument("Tableau: rows must weakly increase");
      if (r > 0 && row[c] <= rows_[r - 1][c])
        throw std::invalid_argument("Tableau: columns must strictly increase");
    }
  }
}

Partition Tableau::shape() const {
  std::vector<int> lens;
  lens.reserve(rows_.size());
  for (const auto& row : rows_) lens.push_back(static_cast<int>(row.size()));
  return Partition(std::move(lens));
}

int Tableau::size() const {
  int s = 0;
  for (const auto& row : rows_) s += static_cast<int>(row.size());
  return s;
}

std::vector<int> Tableau::content(int max_entry) const {
  int mx = max_entry;
  for (const auto& row : rows_)
    for (int e : row) mx = std::max(mx, e);
  std::vector<int> c(static_cast<size_t>(mx), 0);
  for (const auto& row : rows_)
    for (int e : row) ++c[static_cast<size_t>(e - 1)];
  return c;
}

std::string Tableau::to_string() const {
  std::string s;
  for (const auto& row : rows_) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) s += " ";
      s += std::to_string(row[c]);
    }
    s += "\n";
  }
  return s;
}

Int dim_sym_irrep(const Partition& lambda) {
  Int num = factorial(lambda.size());
  Partition t = lambda.transpose();
  Int hooks = 1;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) {
      int arm = lambda[r] - c - 1;
      int leg = t[c] - r - 1;
      hooks *= arm + leg + 1;
    }
  }
  Int q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), hooks.get_mpz_t());
  if (rem != 0) throw std::logic_error("dim_sym_irrep: hook product does not divide d!");
  return q;
}

Int dim_gl_irrep(int n, const Partition& lambda) {
  if (n < 0) throw std::invalid_argument("dim_gl_irrep: n < 0");
  if (lambda.length() > n) return 0;
  Int num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den *= j - i;
    }
  }
  Int q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw std::logic_error("dim_gl_irrep: non-integral Weyl quotient");
  return q;
}

namespace {

// Backtracking fill of cell (r, c), row-major.  remaining[v-1] < 0 means
// value v is unbounded (used for the entries-<=-max enumeration).
void fill_tableau(const Partition& shape, int max_entry,
                  std::vector<int>& remaining,
                  std::vector<std::vector<int>>& rows, int r, int c,
                  const std::function<void(const std::vector<std::vector<int>>&)>& sink) {
  if (r == shape.length()) {
    sink(rows);
    return;
  }
  int nr = r, nc = c + 1;
  if (nc >= shape[r]) {
    nr = r + 1;
    nc = 0;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
  if (r > 0) lo = std::max(lo, rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
  for (int v = lo; v <= max_entry; ++v) {
    int& rem = remaining[static_cast<size_t>(v - 1)];
    if (rem == 0) continue;
    if (rem > 0) --rem;
    rows[static_cast<size_t>(r)].push_back(v);
    fill_tableau(shape, max_entry, remaining, rows, nr, nc, sink);
    rows[static_cast<size_t>(r)].pop_back();
    if (rem >= 0) ++rem;
  }
}

void enumerate_ssyt(const Partition& shape, int max_entry,
                    std::vector<int> remaining,
                    const std::function<void(const std::vector<std::vector<int>>&)>& sink) {
  if (shape.size() == 0) {
    sink({});
    return;
  }
  std::vector<std::vector<int>> rows(static_cast<size_t>(shape.length()));
  fill_tableau(shape, max_entry, remaining, rows, 0, 0, sink);
}

}  // namespace

Int kostka(const Partition& lambda, const std::vector<int>& mu) {
  long total = 0;
  for (int m : mu) {
    if (m < 0) throw std::invalid_argument("kostka: negative content entry");
    total += m;
  }
  if (total != lambda.size())
    throw std::invalid_argument("kostka: content does not sum to |lambda|");
  Int count = 0;
  enumerate_ssyt(lambda, static_cast<int>(mu.size()), mu,
                 [&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

std::vector<Tableau> semistandard_tableaux(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  std::vector<int> unbounded(static_cast<size_t>(max_entry), -1);
  enumerate_ssyt(shape, max_entry, unbounded,
                 [&](const std::vector<std::vector<int>>& rows) { out.emplace_back(rows); });
  return out;
}

std::vector<Tableau> semistandard_tableaux_with_content(
    const Partition& shape, const std::vector<int>& content) {
  std::vector<Tableau> out;
  enumerate_ssyt(shape, static_cast<int>(content.size()), content,
                 [&](const std::vector<std::vector<int>>& rows) { out.emplace_back(rows); });
  return out;
}

}  // namespace duality
