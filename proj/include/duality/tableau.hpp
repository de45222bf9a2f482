#pragma once

#include <string>
#include <vector>

#include "duality/partition.hpp"

namespace duality {

/// Semistandard Young tableau: rows weakly increase, columns strictly
/// increase, entries positive.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  Partition shape() const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const;

  /// Multiplicity vector of the values 1..max(max_entry, largest entry).
  std::vector<int> content(int max_entry = 0) const;

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau&) const = default;

  std::string to_string() const;

 private:
  std::vector<std::vector<int>> rows_;
};

/// f^lambda, the dimension of the symmetric-group irreducible: d! over the
/// product of hook lengths.
Int dim_sym_irrep(const Partition& lambda);

/// Dimension of the gl_n irreducible of highest weight lambda by the Weyl
/// product formula (lambda zero-padded to n parts).  Returns 0 when lambda
/// has more than n parts.
Int dim_gl_irrep(int n, const Partition& lambda);

/// Kostka number K_{lambda,mu}: semistandard tableaux of shape lambda and
/// content mu.  sum(mu) must equal |lambda|; entries of mu must be >= 0.
Int kostka(const Partition& lambda, const std::vector<int>& mu);

/// All semistandard tableaux of the given shape with entries <= max_entry.
std::vector<Tableau> semistandard_tableaux(const Partition& shape,
                                           int max_entry);

/// All semistandard tableaux of the given shape and content.
std::vector<Tableau> semistandard_tableaux_with_content(
    const Partition& shape, const std::vector<int>& content);

}  // namespace duality
