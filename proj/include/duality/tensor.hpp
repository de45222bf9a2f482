#pragma once

#include <map>
#include <utility>
#include <vector>

#include "duality/characters.hpp"
#include "duality/linalg.hpp"
#include "duality/rsk.hpp"
#include "duality/tableau.hpp"

namespace duality {

/// Based model of (C^n)^{(x)d}: basis the words in [1..n]^d, gl_n acting by
/// the Leibniz rule across tensor slots, S_d by place permutation.
class TensorSpace {
 public:
  TensorSpace(int n, int d, long long budget = kDefaultBudget);

  int n() const { return n_; }
  int d() const { return d_; }
  long dim() const { return dim_; }

  std::vector<int> word_at(long idx) const;  // letters 1..n
  long index_of(const std::vector<int>& word) const;
  std::string label(long idx) const;
  std::vector<int> content_of(long idx) const;  // length n

  /// Image of basis vector idx under E_ab (1-based), as a sparse vector.
  std::vector<std::pair<long, Rat>> apply_gl(int a, int b, long idx) const;

  RationalMatrix gl_generator(int a, int b) const;
  /// Place permutation: slot t of the image holds the letter from slot
  /// s^{-1}(t).
  RationalMatrix place_permutation(const Permutation& s) const;
  RationalMatrix transposition(int i) const;  // s_i, 1 <= i <= d-1

  /// Basis indices grouped by content vector.
  std::map<std::vector<int>, std::vector<long>> weight_blocks() const;

 private:
  int n_, d_;
  long dim_;
};

/// Based model of S^d(C^n (x) C^m): basis the degree-d monomials z^A indexed
/// by n x m composition matrices; gl_n acts by row polarization, gl_m by
/// column polarization.  The h_n x h_m weight of z^A is (row sums, column
/// sums).
class SymmetricModel {
 public:
  SymmetricModel(int n, int m, int d, long long budget = kDefaultBudget);

  int n() const { return n_; }
  int m() const { return m_; }
  int d() const { return d_; }
  long dim() const { return static_cast<long>(basis_.size()); }

  const std::vector<CompositionMatrix>& basis() const { return basis_; }
  const CompositionMatrix& monomial(long idx) const {
    return basis_[static_cast<size_t>(idx)];
  }
  long index_of(const CompositionMatrix& a) const;
  std::string label(long idx) const;
  std::pair<std::vector<int>, std::vector<int>> weight_of(long idx) const;

  std::vector<std::pair<long, Rat>> apply_row(int a, int b, long idx) const;
  std::vector<std::pair<long, Rat>> apply_col(int a, int b, long idx) const;
  RationalMatrix row_generator(int a, int b) const;
  RationalMatrix col_generator(int a, int b) const;

 private:
  int n_, m_, d_;
  std::vector<CompositionMatrix> basis_;
  std::map<std::vector<int>, long> index_;
};

struct HighestWeightVector {
  std::vector<int> weight_row;
  std::vector<int> weight_col;
  std::vector<std::pair<long, Rat>> coeffs;  // sparse over the model basis
};

/// Basis of the joint kernel of all raising operators E_{a,a+1} on both
/// sides, computed weight block by weight block (raising operators shift
/// weights, so the kernel is weight-graded).  Sorted by weight pair.
std::vector<HighestWeightVector> joint_highest_weight_vectors(
    const SymmetricModel& model);

/// The expected multiset {(lambda, lambda) : lambda in P^d_{min(n,m)}} as
/// padded weight pairs, sorted like the vectors above.
std::vector<std::pair<std::vector<int>, std::vector<int>>>
expected_highest_weight_multiset(int n, int m, int d);

struct SchurMultiplicity {
  Int sym_mult;  // multiplicity of S_lambda, via characters
  Int gl_mult;   // multiplicity of the gl_n isotype, via raising-kernels
};

/// For each lambda in P^d_n, the two multiplicities in (C^n)^{(x)d} computed
/// along independent routes.
std::map<Partition, SchurMultiplicity> schur_duality_multiplicities(
    int n, int d, long long budget = kDefaultBudget);

struct ZeroWeightBridge {
  /// (monomial with all column sums 1, corresponding word), in model order.
  std::vector<std::pair<CompositionMatrix, std::vector<int>>> pairs;
  bool gl_intertwines;
  bool sd_intertwines;
};

/// The sub-basis of S^d(C^n (x) C^d) with all column sums 1 against words of
/// (C^n)^{(x)d}: column j maps to the row of its unique 1.  Verifies, per
/// generator, that the bijection intertwines the gl_n actions and carries
/// column permutation to place permutation.
ZeroWeightBridge zero_weight_bridge(int n, int d,
                                    long long budget = kDefaultBudget);

/// Character of the value-permutation action of S_d on the content-(1,..,1)
/// subspace of the Young-symmetrizer image of shape lambda in (C^d)^{(x)d},
/// keyed by cycle type.  The image dimension equals f^lambda.
std::map<CycleType, Int> weyl_group_action_on_zero_weight(
    const Partition& lambda, long long budget = kDefaultBudget);

}  // namespace duality
