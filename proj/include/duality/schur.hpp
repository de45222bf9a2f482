#pragma once

#include <json.hpp>

#include <map>
#include <vector>

#include "duality/report.hpp"
#include "duality/rsk.hpp"
#include "duality/tensor.hpp"

namespace duality {

/// Number of simultaneous-place-permutation orbits on pairs of words
/// [1..n]^d x [1..m]^d.  This is the kernel of the equations
/// X_{s_i v, s_i w} = X_{v,w}, computed combinatorially (the kernel of a
/// difference system is spanned by orbit indicators), and hence the
/// dimension of Hom_{S_d}((C^m)^{(x)d}, (C^n)^{(x)d}).
long word_pair_orbit_count(int n, int m, int d, long long budget = kDefaultBudget);

struct CommutantCheck {
  long orbit_count;   // kernel-computed commutant dimension
  long label_count;   // number of n x m matrices with entry sum d
  bool fibers_match;  // every orbit is exactly one matrix fiber
};

/// Checks that the span of the matrix-indexed orbit-sum basis equals the
/// kernel-computed equivariant space.
CommutantCheck commutant_check(int n, int m, int d,
                               long long budget = kDefaultBudget);

/// The convolution algebra model: End_{S_d}((C^n)^{(x)d}) with its basis of
/// orbit-sum endomorphisms indexed by n x n composition matrices, and the
/// exact multiplication table.
class SchurAlgebra {
 public:
  SchurAlgebra(int n, int d, long long budget = kDefaultBudget);

  int n() const { return n_; }
  int d() const { return d_; }
  long dim() const { return static_cast<long>(labels_.size()); }

  const std::vector<CompositionMatrix>& labels() const { return labels_; }
  const RationalMatrix& basis_endo(long i) const {
    return endos_[static_cast<size_t>(i)];
  }
  long index_of(const CompositionMatrix& a) const;

  /// Structure constants: xi_i xi_j = sum_k c * xi_k (sparse, integer).
  const std::vector<std::pair<long, Int>>& product(long i, long j) const;

  /// Indices of the diagonal-matrix labels; their sum acts as the identity.
  std::vector<long> unit_indices() const;
  RationalMatrix unit_endo() const;

  nlohmann::json to_json() const;

 private:
  int n_, d_;
  std::vector<CompositionMatrix> labels_;
  std::vector<RationalMatrix> endos_;
  std::map<std::vector<int>, long> label_index_;
  std::vector<std::vector<std::vector<std::pair<long, Int>>>> table_;
};

SchurAlgebra build_schur_algebra(int n, int d,
                                 long long budget = kDefaultBudget);

/// Central idempotent e_lambda acting by place permutation on (C^m)^{(x)d}:
/// (f^lambda/d!) sum_w chi^lambda(w) P_w.
RationalMatrix central_idempotent(const Partition& lambda, int m, int d,
                                  long long budget = kDefaultBudget);

/// Sum of the central idempotents over partitions with at most r parts,
/// acting on (C^m)^{(x)d}.
RationalMatrix isotypic_projector(int r, int m, int d,
                                  long long budget = kDefaultBudget);

/// Model of the truncated correspondence space: S_d-equivariant maps
/// (C^m)^{(x)d} -> (C^n)^{(x)d} with isotypic support in partitions of at
/// most r parts.
class IntertwinerSpace {
 public:
  IntertwinerSpace(int n, int m, int d, int r,
                   long long budget = kDefaultBudget);

  int n() const { return n_; }
  int m() const { return m_; }
  int d() const { return d_; }
  int trunc() const { return r_; }
  long dim() const { return static_cast<long>(basis_.size()); }
  const std::vector<RationalMatrix>& basis() const { return basis_; }

 private:
  int n_, m_, d_, r_;
  std::vector<RationalMatrix> basis_;
};

/// Dimension of IntertwinerSpace(n,m,d,r) computed blockwise without storing
/// the basis.
long intertwiner_dim(int n, int m, int d, int r,
                     long long budget = kDefaultBudget);

/// The closed form it must match: sum over lambda in P^d with at most
/// min(n,r,m) parts of dim V^n_lambda * dim V^m_lambda.
Int intertwiner_dim_formula(int n, int m, int d, int r);

/// Isotypic support of an equivariant map X: (C^m)^{(x)d} -> (C^n)^{(x)d},
/// as the set of lambda with X e_lambda != 0.
std::vector<Partition> isotypic_support(const RationalMatrix& x, int m, int d,
                                        long long budget = kDefaultBudget);

struct ComposeResult {
  int min_trunc;                    // min(a, k, b)
  int support_bound;                // min(n, a, k, b, m)
  bool support_within_rule;         // all products obey the bound
  bool products_in_target;          // all products lie in the min-truncated space
  long pairs_checked;
  long product_span_dim;            // rank of the span of all products
  std::vector<std::string> violations;  // empty on success
};

/// Composes every basis pair X_i o Y_j (X source rank must equal Y target
/// rank) and checks the min-truncation rule.
ComposeResult compose_intertwiners(const IntertwinerSpace& x,
                                   const IntertwinerSpace& y,
                                   long long budget = kDefaultBudget);

/// Closure of the gl_n generator images on the tensor space against the
/// Schur algebra dimension (surjectivity of the enveloping-algebra map).
VerificationReport verify_ginzburg_surjection(int n, int d,
                                              long long budget = kDefaultBudget);

/// Dimensions of the simple modules of the Schur algebra model, keyed by
/// partition; their squares sum to dim S(n,d).
std::map<Partition, Int> simple_module_dims(int n, int d);

}  // namespace duality
