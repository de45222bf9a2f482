#pragma once

#include <functional>
#include <string>
#include <vector>

#include "duality/arith.hpp"

namespace duality {

/// Dense matrix over Q.  Immutable in spirit: operations return new values.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);  // zero matrix
  RationalMatrix(int rows, int cols, std::vector<Rat> data);

  static RationalMatrix identity(int k);
  static RationalMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rat& at(int i, int j) const { return data_[index(i, j)]; }
  Rat& at(int i, int j) { return data_[index(i, j)]; }

  RationalMatrix transpose() const;
  RationalMatrix operator+(const RationalMatrix&) const;
  RationalMatrix operator-(const RationalMatrix&) const;
  RationalMatrix operator*(const RationalMatrix&) const;
  RationalMatrix scaled(const Rat& c) const;

  bool is_zero() const;
  bool operator==(const RationalMatrix&) const = default;

  /// Row-major flattening.
  std::vector<Rat> flatten() const { return data_; }
  std::string to_string() const;

 private:
  size_t index(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) +
           static_cast<size_t>(j);
  }
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

/// Reduced row-echelon form (pivots 1, pivot columns cleared, zero rows at
/// the bottom).  Canonical: equal row spaces give equal rref.
RationalMatrix rref(const RationalMatrix& m);

int rank(const RationalMatrix& m);

/// Rows span {x : m x = 0}; returned in canonical echelon form.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Determinant of a square matrix.
Rat det(const RationalMatrix& m);

/// Subspace of Q^ambient with canonical reduced-echelon row basis, so that
/// equality of subspaces is equality of the representation.
class Subspace {
 public:
  Subspace() = default;  // zero subspace of Q^0
  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace from_rows(int ambient, const RationalMatrix& rows);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace&) const = default;

 private:
  int ambient_ = 0;
  RationalMatrix basis_;  // rref, no zero rows
};

Subspace intersect(const Subspace& u, const Subspace& w);
Subspace subspace_sum(const Subspace& u, const Subspace& w);

/// Incremental echelon sieve over flattened vectors; used for rank growth
/// and membership tests.
class EchelonSieve {
 public:
  /// Reduces v against the rows held so far; if a nonzero residual remains
  /// it is adjoined and true is returned.
  bool add(std::vector<Rat> v);
  /// True iff v lies in the current span.
  bool contains(std::vector<Rat> v) const;
  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  void reduce(std::vector<Rat>& v) const;
  std::vector<std::pair<int, std::vector<Rat>>> rows_;  // (pivot, row), pivot asc
};

struct ClosureResult {
  std::vector<RationalMatrix> basis;
  std::vector<int> dim_trajectory;  // dimension after seeding and each round
};

/// Smallest product-closed linear span containing the identity and the
/// generators (all square, equal size).  product defaults to matrix
/// multiplication.
ClosureResult span_closure(
    const std::vector<RationalMatrix>& generators,
    const std::function<RationalMatrix(const RationalMatrix&,
                                       const RationalMatrix&)>& product = {});

}  // namespace duality
