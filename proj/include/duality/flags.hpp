#pragma once

#include <json.hpp>

#include <optional>
#include <random>
#include <vector>

#include "duality/linalg.hpp"
#include "duality/partition.hpp"
#include "duality/report.hpp"
#include "duality/rsk.hpp"

namespace duality {

/// Step dimensions d_1,...,d_n >= 0 summing to the ambient dimension d.
/// Zero steps are allowed.
struct FlagType {
  std::vector<int> steps;
  FlagType() = default;
  explicit FlagType(std::vector<int> s);
  int length() const { return static_cast<int>(steps.size()); }
  int total() const;
  bool operator==(const FlagType&) const = default;
  auto operator<=>(const FlagType&) const = default;
  std::string to_string() const;
};

/// All flag types of d into exactly n (ordered, possibly zero) steps.
std::vector<FlagType> enumerate_flag_types(int n, int d);

/// Chain 0 = F_0 <= F_1 <= ... <= F_n = Q^d of exact subspaces.  Nesting is
/// verified via subspace intersection on construction.
class Flag {
 public:
  /// chain holds F_1..F_n; the last must be the full space.  Throws
  /// std::invalid_argument naming the failing chain index.
  Flag(int ambient, std::vector<Subspace> chain);

  int ambient() const { return ambient_; }
  int length() const { return static_cast<int>(chain_.size()); }
  /// F_i for i = 0..length(); F_0 is the zero subspace.
  const Subspace& step(int i) const;
  FlagType type() const;

  /// Image flag under the invertible map x -> g x.
  Flag transformed(const RationalMatrix& g) const;

  bool operator==(const Flag&) const = default;

 private:
  int ambient_ = 0;
  std::vector<Subspace> chain_;
  Subspace zero_;
};

/// GL_d-orbit invariant of a flag pair: the second difference of the
/// intersection dimension table.  Row sums give type(F), column sums
/// type(F').
CompositionMatrix orbit_invariant(const Flag& f, const Flag& g);

struct OrbitCount {
  Int count;  // binomial(nm+d-1, d)
  std::vector<CompositionMatrix> matrices;
};

/// Orbit census of flag pairs: labels plus the closed count; the two are
/// checked against each other.
OrbitCount count_orbits(int n, int m, int d);

/// Dimension of the partial flag variety of the given type:
/// sum_{i<j} d_i d_j.
long flag_variety_dim(const FlagType& t);

/// Dimension of the conjugation orbit of the nilpotent with Jordan blocks
/// transpose(lambda): d^2 - sum lambda_i^2.  Always even.
long nilpotent_orbit_dim(const Partition& lambda);

/// Jordan matrix with blocks transpose(lambda) (the nilpotent attached to
/// lambda by the block-size convention above).
RationalMatrix nilpotent_of_type(const Partition& lambda);

/// Dimension of the variety of t-flags F with x F_i <= F_{i-1}, x of the
/// lambda type above: empty iff kostka(lambda, t) = 0, else
/// flag_variety_dim(t) - nilpotent_orbit_dim(lambda)/2.
std::optional<long> spaltenstein_dim(const Partition& lambda, const FlagType& t);

struct CensusRow {
  CompositionMatrix matrix;
  std::vector<int> row_weight;
  std::vector<int> col_weight;
  long dimension;
};

/// One row per orbit matrix (requires k >= min(n,m), where the component
/// labelling by matrices is valid).
std::vector<CensusRow> component_census(int n, int m, int d, int k);

struct StratumRow {
  Partition lambda;
  FlagType t1, t2;
  long orbit_dim;
  long stratum_dim;
};

/// Orbit-stratum dimension table over lambda with at most min(n,k,m) parts;
/// the census fallback for k < min(n,m).
std::vector<StratumRow> orbit_stratum_table(int n, int m, int d, int k);

/// Exhaustive check of the half-dimension identity over all (lambda,t1,t2)
/// with both strata non-empty.
VerificationReport dimension_identity_check(int n, int m, int d);

/// True iff the orbit attached to lambda lies in the closure of the orbit
/// attached to mu.  Direction fixed here: closure order on Jordan types is
/// dominance, and the attached Jordan type is transpose(lambda), so this is
/// dominance_leq(transpose(lambda), transpose(mu)), equivalently
/// dominance_leq(mu, lambda).
bool closure_order_leq(const Partition& lambda, const Partition& mu);

/// Random integer matrix with entries in [-9,9], retried until invertible.
RationalMatrix random_invertible(int d, std::mt19937_64& rng);

/// Random flag of the given type: row prefixes of a random invertible
/// integer matrix.
Flag random_flag(const FlagType& t, std::mt19937_64& rng);

nlohmann::json flag_to_json(const Flag& f);
/// Parses {"d": int, "steps": [[["p/q",...],...],...]} where steps[i] is the
/// cumulative basis of F_{i+1}.  Throws std::invalid_argument on malformed
/// input, naming the failing chain index.
Flag flag_from_json(const nlohmann::json& j);

nlohmann::json composition_matrix_to_json(const CompositionMatrix& a);
CompositionMatrix composition_matrix_from_json(const nlohmann::json& j);

}  // namespace duality
