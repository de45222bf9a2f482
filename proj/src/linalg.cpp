#include "duality/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace duality {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("RationalMatrix: negative dimensions");
  data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rat(0));
}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rat> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    throw std::invalid_argument("RationalMatrix: data size mismatch");
}

RationalMatrix RationalMatrix::identity(int k) {
  RationalMatrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_int_rows(
    const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != c)
      throw std::invalid_argument("from_int_rows: ragged rows");
    for (int j = 0; j < c; ++j)
      m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix +: shape mismatch");
  RationalMatrix r(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix -: shape mismatch");
  RationalMatrix r(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
  return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix *: shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& b = o.at(k, j);
        if (b == 0) continue;
        r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

RationalMatrix RationalMatrix::scaled(const Rat& c) const {
  RationalMatrix r(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
  return r;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

std::string RationalMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ",";
      s += rat_string(at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

RationalMatrix rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (a.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(r, j));
    Rat inv = a.at(r, c);
    for (int j = c; j < a.cols(); ++j) a.at(r, j) /= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return a;
}

int rank(const RationalMatrix& m) {
  RationalMatrix a = rref(m);
  int r = 0;
  for (int i = 0; i < a.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++r;
  }
  return r;
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  RationalMatrix a = rref(m);
  int n = a.cols();
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j) != 0) {
        pivot_col.push_back(j);
        is_pivot[static_cast<size_t>(j)] = true;
        break;
      }
    }
  }
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[static_cast<size_t>(j)]) free_cols.push_back(j);
  RationalMatrix k(static_cast<int>(free_cols.size()), n);
  for (size_t f = 0; f < free_cols.size(); ++f) {
    int fc = free_cols[f];
    k.at(static_cast<int>(f), fc) = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i)
      k.at(static_cast<int>(f), pivot_col[i]) = -a.at(static_cast<int>(i), fc);
  }
  return rref(k);
}

Rat det(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
  RationalMatrix a = m;
  int n = a.rows();
  Rat d(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (a.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    Rat inv = a.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      Rat f = a.at(i, c) / inv;
      for (int j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return d;
}

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = RationalMatrix(0, ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = RationalMatrix::identity(ambient);
  return s;
}

Subspace Subspace::from_rows(int ambient, const RationalMatrix& rows) {
  if (rows.cols() != ambient && rows.rows() > 0)
    throw std::invalid_argument("Subspace: row length != ambient dimension");
  RationalMatrix e = rref(rows.rows() > 0 ? rows : RationalMatrix(0, ambient));
  int r = 0;
  for (int i = 0; i < e.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < e.cols(); ++j)
      if (e.at(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (!nonzero) break;  // rref puts zero rows last
    ++r;
  }
  RationalMatrix basis(r, ambient);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < ambient; ++j) basis.at(i, j) = e.at(i, j);
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = std::move(basis);
  return s;
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) return false;
  return subspace_sum(*this, other).dim() == dim();
}

namespace {

RationalMatrix stack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("stack: width mismatch");
  RationalMatrix s(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) s.at(a.rows() + i, j) = b.at(i, j);
  return s;
}

}  // namespace

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient())
    throw std::invalid_argument("intersect: ambient dimensions differ");
  int d = u.ambient();
  // Zassenhaus: rref of [[U U],[W 0]]; rows with zero left half carry an
  // intersection basis in the right half.
  RationalMatrix block(u.dim() + w.dim(), 2 * d);
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < d; ++j) {
      block.at(i, j) = u.basis().at(i, j);
      block.at(i, d + j) = u.basis().at(i, j);
    }
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < d; ++j) block.at(u.dim() + i, j) = w.basis().at(i, j);
  RationalMatrix e = rref(block);
  std::vector<Rat> rows;
  int count = 0;
  for (int i = 0; i < e.rows(); ++i) {
    bool left_zero = true;
    for (int j = 0; j < d; ++j)
      if (e.at(i, j) != 0) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    bool right_zero = true;
    for (int j = 0; j < d; ++j)
      if (e.at(i, d + j) != 0) {
        right_zero = false;
        break;
      }
    if (right_zero) continue;
    for (int j = 0; j < d; ++j) rows.push_back(e.at(i, d + j));
    ++count;
  }
  return Subspace::from_rows(d, RationalMatrix(count, d, std::move(rows)));
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient())
    throw std::invalid_argument("subspace_sum: ambient dimensions differ");
  return Subspace::from_rows(u.ambient(), stack(u.basis(), w.basis()));
}

void EchelonSieve::reduce(std::vector<Rat>& v) const {
  for (const auto& [p, row] : rows_) {
    if (v[static_cast<size_t>(p)] == 0) continue;
    Rat f = v[static_cast<size_t>(p)];
    for (size_t j = static_cast<size_t>(p); j < v.size(); ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
}

bool EchelonSieve::add(std::vector<Rat> v) {
  reduce(v);
  int pivot = -1;
  for (size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) {
      pivot = static_cast<int>(j);
      break;
    }
  if (pivot < 0) return false;
  Rat inv = v[static_cast<size_t>(pivot)];
  for (size_t j = static_cast<size_t>(pivot); j < v.size(); ++j) v[j] /= inv;
  auto it = std::lower_bound(
      rows_.begin(), rows_.end(), pivot,
      [](const auto& row, int p) { return row.first < p; });
  rows_.insert(it, {pivot, std::move(v)});
  return true;
}

bool EchelonSieve::contains(std::vector<Rat> v) const {
  reduce(v);
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

ClosureResult span_closure(
    const std::vector<RationalMatrix>& generators,
    const std::function<RationalMatrix(const RationalMatrix&,
                                       const RationalMatrix&)>& product) {
  if (generators.empty())
    throw std::invalid_argument("span_closure: no generators");
  int n = generators[0].rows();
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n)
      throw std::invalid_argument("span_closure: generators must be square, equal size");
  auto mul = product ? product
                     : [](const RationalMatrix& a, const RationalMatrix& b) {
                         return a * b;
                       };
  ClosureResult res;
  EchelonSieve sieve;
  auto try_add = [&](const RationalMatrix& m) {
    if (sieve.add(m.flatten())) {
      res.basis.push_back(m);
      return true;
    }
    return false;
  };
  try_add(RationalMatrix::identity(n));
  for (const auto& g : generators) try_add(g);
  res.dim_trajectory.push_back(sieve.dim());
  for (;;) {
    size_t snapshot = res.basis.size();
    bool grew = false;
    for (size_t i = 0; i < snapshot; ++i)
      for (size_t j = 0; j < snapshot; ++j)
        if (try_add(mul(res.basis[i], res.basis[j]))) grew = true;
    res.dim_trajectory.push_back(sieve.dim());
    if (!grew) break;
  }
  return res;
}

}  // namespace duality
