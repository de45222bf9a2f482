#pragma once

#include <string>
#include <utility>
#include <vector>

#include "duality/partition.hpp"
#include "duality/tableau.hpp"

namespace duality {

/// n x m matrix of non-negative integers; total() is the d it distributes.
class CompositionMatrix {
 public:
  CompositionMatrix() = default;
  CompositionMatrix(int n, int m);  // zero matrix
  CompositionMatrix(int n, int m, std::vector<std::vector<int>> entries);

  int rows() const { return n_; }
  int cols() const { return m_; }
  int at(int i, int j) const { return a_[static_cast<size_t>(i * m_ + j)]; }
  int& at(int i, int j) { return a_[static_cast<size_t>(i * m_ + j)]; }
  int total() const;
  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;
  CompositionMatrix transpose() const;

  bool operator==(const CompositionMatrix&) const = default;
  auto operator<=>(const CompositionMatrix&) const = default;

  std::string to_string() const;  // "[[1,0],[0,1]]"

 private:
  int n_ = 0, m_ = 0;
  std::vector<int> a_;
};

/// All n x m non-negative integer matrices with entry sum d, ascending
/// row-major lexicographic order.
std::vector<CompositionMatrix> enumerate_composition_matrices(int n, int m,
                                                              int d);

/// Permutation of {1..d} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int d);

  int degree() const { return static_cast<int>(word_.size()); }
  int operator()(int x) const { return word_[static_cast<size_t>(x - 1)]; }
  const std::vector<int>& word() const { return word_; }
  Permutation inverse() const;
  Permutation compose(const Permutation& other) const;  // this after other

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

CycleType cycle_type(const Permutation& w);

/// Row-insertion RSK on the biword of A (pairs (i,j) in lexicographic order,
/// each repeated entry-many times; bottom word inserted, top word recorded).
/// P and Q are semistandard of equal shape; content(P) = column sums of A,
/// content(Q) = row sums of A.
std::pair<Tableau, Tableau> rsk(const CompositionMatrix& A);

/// Inverse correspondence.  P and Q must have equal shape.  rows/cols give
/// the matrix dimensions; 0 means infer from the largest entry of Q / P.
CompositionMatrix inverse_rsk(const Tableau& P, const Tableau& Q, int rows = 0,
                              int cols = 0);

/// Shape of the Robinson-Schensted insertion tableau of w.
Partition rs_shape(const Permutation& w);

/// Length of the longest strictly decreasing subsequence of w.
int lds(const Permutation& w);

}  // namespace duality
