#include "duality/characters.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace duality {

namespace {

// Recursion on beta numbers (first-column hook lengths).  Removing a border
// strip of length r from the partition is moving some beta number b to b - r,
// legal when b - r is free; the strip height parity is the number of beta
// numbers passed over.
Int mn_recurse(std::vector<int>& beta, const std::vector<int>& rho, size_t t) {
  if (t == rho.size()) return 1;
  int r = rho[t];
  Int total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    int target = b - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int crossed = 0;
    for (int other : beta)
      if (other > target && other < b) ++crossed;
    beta[i] = target;
    Int sub = mn_recurse(beta, rho, t + 1);
    beta[i] = b;
    if (crossed % 2 == 0)
      total += sub;
    else
      total -= sub;
  }
  return total;
}

}  // namespace

Int sym_character(const Partition& lambda, const CycleType& rho) {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("sym_character: |lambda| != |rho|");
  if (lambda.size() == 0) return 1;
  int l = lambda.length();
  std::vector<int> beta(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] = lambda[i] + (l - 1 - i);
  return mn_recurse(beta, rho.parts(), 0);
}

Int centralizer_order(const CycleType& rho) {
  Int z = 1;
  int run = 0;
  for (int i = 0; i < rho.length(); ++i) {
    z *= rho[i];
    ++run;
    if (i + 1 >= rho.length() || rho[i + 1] != rho[i]) {
      z *= factorial(run);
      run = 0;
    }
  }
  return z;
}

Int conjugacy_class_size(const CycleType& rho) {
  Int q, rem;
  Int num = factorial(rho.size());
  Int den = centralizer_order(rho);
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw std::logic_error("conjugacy_class_size: non-integral");
  return q;
}

}  // namespace duality
