#include "duality/schur.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "duality/characters.hpp"
#include "duality/tableau.hpp"

namespace duality {

namespace {

void check_budget_ll(const Int& v, long long budget, const char* what) {
  if (v > to_int(budget))
    throw budget_error(std::string(what) + ": size " + v.get_str() +
                       " exceeds budget " + std::to_string(budget));
}

// Invariant matrix of a word pair: entry (i,j) counts positions carrying
// (i,j).
CompositionMatrix pair_matrix(const std::vector<int>& v,
                              const std::vector<int>& w, int n, int m) {
  CompositionMatrix a(n, m);
  for (size_t t = 0; t < v.size(); ++t)
    a.at(v[t] - 1, w[t] - 1) += 1;
  return a;
}

struct UnionFind {
  std::vector<long> parent;
  explicit UnionFind(long size) : parent(static_cast<size_t>(size)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  long find(long x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(long a, long b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// Orbits of word pairs under the simultaneous adjacent transpositions: the
// kernel of the difference system X_{s_i v, s_i w} = X_{v, w} is spanned by
// the orbit indicators, so components are computed by union-find.
UnionFind pair_orbits(const TensorSpace& vn, const TensorSpace& vm) {
  int d = vn.d();
  UnionFind uf(vn.dim() * vm.dim());
  for (long vi = 0; vi < vn.dim(); ++vi) {
    std::vector<int> v = vn.word_at(vi);
    for (long wi = 0; wi < vm.dim(); ++wi) {
      std::vector<int> w = vm.word_at(wi);
      for (int t = 0; t + 1 < d; ++t) {
        std::vector<int> v2 = v, w2 = w;
        std::swap(v2[static_cast<size_t>(t)], v2[static_cast<size_t>(t + 1)]);
        std::swap(w2[static_cast<size_t>(t)], w2[static_cast<size_t>(t + 1)]);
        uf.unite(vi * vm.dim() + wi, vn.index_of(v2) * vm.dim() + vm.index_of(w2));
      }
    }
  }
  return uf;
}

}  // namespace

long word_pair_orbit_count(int n, int m, int d, long long budget) {
  TensorSpace vn(n, d, budget), vm(m, d, budget);
  long pairs = vn.dim() * vm.dim();
  UnionFind uf = pair_orbits(vn, vm);
  long count = 0;
  for (long x = 0; x < pairs; ++x)
    if (uf.find(x) == x) ++count;
  return count;
}

CommutantCheck commutant_check(int n, int m, int d, long long budget) {
  TensorSpace vn(n, d, budget), vm(m, d, budget);
  UnionFind uf = pair_orbits(vn, vm);
  CommutantCheck res;
  res.orbit_count = 0;
  std::map<long, std::vector<int>> root_matrix;  // flattened matrix per orbit
  res.fibers_match = true;
  std::map<std::vector<int>, long> fibers_seen;
  for (long vi = 0; vi < vn.dim(); ++vi) {
    for (long wi = 0; wi < vm.dim(); ++wi) {
      long x = vi * vm.dim() + wi;
      CompositionMatrix a = pair_matrix(vn.word_at(vi), vm.word_at(wi), n, m);
      std::vector<int> key;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) key.push_back(a.at(i, j));
      long root = uf.find(x);
      if (root == x) ++res.orbit_count;
      auto [it, inserted] = root_matrix.try_emplace(root, key);
      if (!inserted && it->second != key) res.fibers_match = false;
      auto [fit, finserted] = fibers_seen.try_emplace(key, root);
      if (!finserted && fit->second != root) res.fibers_match = false;
    }
  }
  res.label_count =
      static_cast<long>(enumerate_composition_matrices(n, m, d).size());
  if (res.orbit_count != res.label_count) res.fibers_match = false;
  return res;
}

SchurAlgebra::SchurAlgebra(int n, int d, long long budget) : n_(n), d_(d) {
  TensorSpace space(n, d, budget);
  check_budget_ll(binomial(static_cast<long>(n) * n + d - 1, d), budget,
                  "SchurAlgebra");
  labels_ = enumerate_composition_matrices(n, n, d);
  for (size_t i = 0; i < labels_.size(); ++i) {
    std::vector<int> key;
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) key.push_back(labels_[i].at(r, c));
    label_index_[key] = static_cast<long>(i);
  }
  long dim_t = space.dim();
  endos_.assign(labels_.size(),
                RationalMatrix(static_cast<int>(dim_t), static_cast<int>(dim_t)));
  // Representative word pair per label and a pair -> label lookup.
  std::vector<long> rep_v(labels_.size(), -1), rep_w(labels_.size(), -1);
  std::vector<long> pair_label(static_cast<size_t>(dim_t) * static_cast<size_t>(dim_t));
  for (long vi = 0; vi < dim_t; ++vi) {
    for (long wi = 0; wi < dim_t; ++wi) {
      CompositionMatrix a = pair_matrix(space.word_at(vi), space.word_at(wi), n, n);
      long k = index_of(a);
      endos_[static_cast<size_t>(k)].at(static_cast<int>(vi), static_cast<int>(wi)) = 1;
      pair_label[static_cast<size_t>(vi * dim_t + wi)] = k;
      if (rep_v[static_cast<size_t>(k)] < 0) {
        rep_v[static_cast<size_t>(k)] = vi;
        rep_w[static_cast<size_t>(k)] = wi;
      }
    }
  }
  // Multiplication table with full verification: the expansion must agree
  // with the matrix product entry by entry.
  table_.assign(labels_.size(), {});
  for (size_t i = 0; i < labels_.size(); ++i) {
    table_[i].assign(labels_.size(), {});
    for (size_t j = 0; j < labels_.size(); ++j) {
      RationalMatrix prod = endos_[i] * endos_[j];
      std::vector<std::pair<long, Int>> expansion;
      std::vector<Rat> coeff_by_label(labels_.size(), Rat(0));
      for (size_t k = 0; k < labels_.size(); ++k) {
        const Rat& c = prod.at(static_cast<int>(rep_v[k]), static_cast<int>(rep_w[k]));
        if (c == 0) continue;
        if (c.get_den() != 1)
          throw std::logic_error("SchurAlgebra: non-integral structure constant");
        expansion.emplace_back(static_cast<long>(k), Int(c.get_num()));
        coeff_by_label[k] = c;
      }
      for (long vi = 0; vi < dim_t; ++vi) {
        for (long wi = 0; wi < dim_t; ++wi) {
          long k = pair_label[static_cast<size_t>(vi * dim_t + wi)];
          if (prod.at(static_cast<int>(vi), static_cast<int>(wi)) !=
              coeff_by_label[static_cast<size_t>(k)])
            throw std::logic_error("SchurAlgebra: product not in the basis span");
        }
      }
      table_[i][j] = std::move(expansion);
    }
  }
}

long SchurAlgebra::index_of(const CompositionMatrix& a) const {
  std::vector<int> key;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) key.push_back(a.at(r, c));
  auto it = label_index_.find(key);
  if (it == label_index_.end())
    throw std::invalid_argument("SchurAlgebra: label not found");
  return it->second;
}

const std::vector<std::pair<long, Int>>& SchurAlgebra::product(long i,
                                                               long j) const {
  return table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

std::vector<long> SchurAlgebra::unit_indices() const {
  std::vector<long> out;
  for (size_t i = 0; i < labels_.size(); ++i) {
    bool diagonal = true;
    for (int r = 0; r < n_ && diagonal; ++r)
      for (int c = 0; c < n_; ++c)
        if (r != c && labels_[i].at(r, c) != 0) {
          diagonal = false;
          break;
        }
    if (diagonal) out.push_back(static_cast<long>(i));
  }
  return out;
}

RationalMatrix SchurAlgebra::unit_endo() const {
  RationalMatrix u(endos_[0].rows(), endos_[0].cols());
  for (long i : unit_indices()) u = u + endos_[static_cast<size_t>(i)];
  return u;
}

nlohmann::json SchurAlgebra::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = n_;
  j["d"] = d_;
  j["basis"] = nlohmann::json::array();
  for (const auto& a : labels_) {
    nlohmann::json mat = nlohmann::json::array();
    for (int r = 0; r < n_; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < n_; ++c) row.push_back(a.at(r, c));
      mat.push_back(row);
    }
    j["basis"].push_back(mat);
  }
  j["products"] = nlohmann::json::array();
  for (long i = 0; i < dim(); ++i)
    for (long jj = 0; jj < dim(); ++jj)
      for (const auto& [k, c] : product(i, jj))
        j["products"].push_back({i, jj, k, c.get_str()});
  return j;
}

SchurAlgebra build_schur_algebra(int n, int d, long long budget) {
  return SchurAlgebra(n, d, budget);
}

RationalMatrix central_idempotent(const Partition& lambda, int m, int d,
                                  long long budget) {
  if (lambda.size() != d)
    throw std::invalid_argument("central_idempotent: |lambda| != d");
  TensorSpace space(m, d, budget);
  Int f = dim_sym_irrep(lambda);
  Rat scale(f, factorial(d));
  scale.canonicalize();
  RationalMatrix e(static_cast<int>(space.dim()), static_cast<int>(space.dim()));
  std::vector<int> w(static_cast<size_t>(d));
  std::iota(w.begin(), w.end(), 1);
  do {
    Permutation sigma(w);
    Rat coeff = scale * Rat(sym_character(lambda, cycle_type(sigma)));
    if (coeff == 0) continue;
    for (long idx = 0; idx < space.dim(); ++idx) {
      std::vector<int> word = space.word_at(idx);
      std::vector<int> u(static_cast<size_t>(d));
      for (int t = 1; t <= d; ++t)
        u[static_cast<size_t>(sigma(t) - 1)] = word[static_cast<size_t>(t - 1)];
      e.at(static_cast<int>(space.index_of(u)), static_cast<int>(idx)) += coeff;
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return e;
}

RationalMatrix isotypic_projector(int r, int m, int d, long long budget) {
  TensorSpace space(m, d, budget);
  RationalMatrix p(static_cast<int>(space.dim()), static_cast<int>(space.dim()));
  int bound = std::min(r, m);
  for (const auto& lambda : enumerate_partitions(d, bound))
    p = p + central_idempotent(lambda, m, d, budget);
  return p;
}

namespace {

// Orbit-sum basis maps (C^m)^{(x)d} -> (C^n)^{(x)d}, one per n x m label.
std::vector<RationalMatrix> equivariant_basis(int n, int m, int d,
                                              long long budget,
                                              std::vector<CompositionMatrix>* labels_out) {
  TensorSpace vn(n, d, budget), vm(m, d, budget);
  auto labels = enumerate_composition_matrices(n, m, d);
  std::map<std::vector<int>, long> label_index;
  for (size_t i = 0; i < labels.size(); ++i) {
    std::vector<int> key;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c) key.push_back(labels[i].at(r, c));
    label_index[key] = static_cast<long>(i);
  }
  std::vector<RationalMatrix> maps(
      labels.size(),
      RationalMatrix(static_cast<int>(vn.dim()), static_cast<int>(vm.dim())));
  for (long vi = 0; vi < vn.dim(); ++vi) {
    for (long wi = 0; wi < vm.dim(); ++wi) {
      CompositionMatrix a = pair_matrix(vn.word_at(vi), vm.word_at(wi), n, m);
      std::vector<int> key;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) key.push_back(a.at(i, j));
      maps[static_cast<size_t>(label_index.at(key))]
          .at(static_cast<int>(vi), static_cast<int>(wi)) = 1;
    }
  }
  if (labels_out) *labels_out = std::move(labels);
  return maps;
}

}  // namespace

IntertwinerSpace::IntertwinerSpace(int n, int m, int d, int r,
                                   long long budget)
    : n_(n), m_(m), d_(d), r_(r) {
  if (r < 0) throw std::invalid_argument("IntertwinerSpace: negative truncation");
  std::vector<CompositionMatrix> labels;
  auto raw = equivariant_basis(n, m, d, budget, &labels);
  RationalMatrix proj = isotypic_projector(r, m, d, budget);
  EchelonSieve sieve;
  for (auto& x : raw) {
    RationalMatrix px = x * proj;
    if (px.is_zero()) continue;
    if (sieve.add(px.flatten())) basis_.push_back(std::move(px));
  }
}

long intertwiner_dim(int n, int m, int d, int r, long long budget) {
  TensorSpace vn(n, d, budget), vm(m, d, budget);
  auto labels = enumerate_composition_matrices(n, m, d);
  RationalMatrix proj = isotypic_projector(r, m, d, budget);
  // Each projected map is supported on one (content, content) block, so the
  // rank splits over blocks.
  auto blocks_n = vn.weight_blocks();
  auto blocks_m = vm.weight_blocks();
  std::map<std::pair<std::vector<int>, std::vector<int>>, EchelonSieve> sieves;
  long dim = 0;
  for (const auto& a : labels) {
    auto rs = a.row_sums();
    auto cs = a.col_sums();
    const auto& rows = blocks_n.at(rs);
    const auto& cols = blocks_m.at(cs);
    // xi_A restricted to its block, then projected on the source side.
    std::vector<Rat> flat;
    flat.reserve(rows.size() * cols.size());
    for (long vi : rows) {
      std::vector<int> v = vn.word_at(vi);
      for (long wj : cols) {
        // Entry (vi, wj) of xi_A * proj = sum_w [pair(v,w)=A] proj(w, wj).
        Rat entry(0);
        for (long w : cols) {
          if (pair_matrix(v, vm.word_at(w), n, m) != a) continue;
          entry += proj.at(static_cast<int>(w), static_cast<int>(wj));
        }
        flat.push_back(entry);
      }
    }
    auto& sieve = sieves[{rs, cs}];
    if (std::any_of(flat.begin(), flat.end(), [](const Rat& x) { return x != 0; }) &&
        sieve.add(std::move(flat)))
      ++dim;
  }
  return dim;
}

Int intertwiner_dim_formula(int n, int m, int d, int r) {
  int bound = std::min(std::min(n, m), r);
  Int total = 0;
  for (const auto& lambda : enumerate_partitions(d, bound))
    total += dim_gl_irrep(n, lambda) * dim_gl_irrep(m, lambda);
  return total;
}

std::vector<Partition> isotypic_support(const RationalMatrix& x, int m, int d,
                                        long long budget) {
  std::vector<Partition> support;
  for (const auto& lambda : enumerate_partitions(d, m)) {
    RationalMatrix e = central_idempotent(lambda, m, d, budget);
    if (!(x * e).is_zero()) support.push_back(lambda);
  }
  return support;
}

ComposeResult compose_intertwiners(const IntertwinerSpace& x,
                                   const IntertwinerSpace& y,
                                   long long budget) {
  if (x.m() != y.n())
    throw std::invalid_argument("compose_intertwiners: middle rank mismatch");
  if (x.d() != y.d())
    throw std::invalid_argument("compose_intertwiners: degree mismatch");
  int n = x.n(), k = x.m(), m = y.m(), d = x.d();
  int a = x.trunc(), b = y.trunc();
  ComposeResult res;
  res.min_trunc = std::min({a, k, b});
  res.support_bound = std::min({n, a, k, b, m});
  res.support_within_rule = true;
  res.products_in_target = true;
  res.pairs_checked = 0;

  IntertwinerSpace target(n, m, d, res.min_trunc, budget);
  EchelonSieve target_span;
  for (const auto& t : target.basis()) target_span.add(t.flatten());
  EchelonSieve product_span;

  // Idempotents on the source side of the product.
  std::vector<std::pair<Partition, RationalMatrix>> idempotents;
  for (const auto& lambda : enumerate_partitions(d, m))
    idempotents.emplace_back(lambda, central_idempotent(lambda, m, d, budget));

  for (const auto& xe : x.basis()) {
    for (const auto& ye : y.basis()) {
      RationalMatrix prod = xe * ye;
      ++res.pairs_checked;
      product_span.add(prod.flatten());
      for (const auto& [lambda, e] : idempotents) {
        if ((prod * e).is_zero()) continue;
        if (lambda.length() > res.support_bound) {
          res.support_within_rule = false;
          res.violations.push_back("support " + lambda.to_string() +
                                   " exceeds bound " +
                                   std::to_string(res.support_bound));
        }
      }
      if (!prod.is_zero() && !target_span.contains(prod.flatten())) {
        res.products_in_target = false;
        res.violations.push_back("product outside the min-truncated space");
      }
    }
  }
  res.product_span_dim = product_span.dim();
  return res;
}

VerificationReport verify_ginzburg_surjection(int n, int d, long long budget) {
  VerificationReport rep;
  rep.check = "ginzburg-surjection";
  rep.params = {{"n", n}, {"d", d}};
  TensorSpace space(n, d, budget);
  check_budget_ll(binomial(static_cast<long>(n) * n + d - 1, d), budget,
                  "verify_ginzburg_surjection");
  std::vector<RationalMatrix> gens;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) gens.push_back(space.gl_generator(a, b));
  ClosureResult closure = span_closure(gens);
  Int formula = binomial(static_cast<long>(n) * n + d - 1, d);
  long commutant = word_pair_orbit_count(n, n, d, budget);
  rep.add("closure dimension = dim S(n,d)",
          std::to_string(closure.basis.size()), formula.get_str());
  rep.add("closure dimension = commutant dimension",
          std::to_string(closure.basis.size()), std::to_string(commutant));
  std::string traj;
  for (size_t i = 0; i < closure.dim_trajectory.size(); ++i) {
    if (i) traj += ",";
    traj += std::to_string(closure.dim_trajectory[i]);
  }
  rep.notes["closure_trajectory"] = traj;
  return rep;
}

std::map<Partition, Int> simple_module_dims(int n, int d) {
  std::map<Partition, Int> out;
  for (const auto& lambda : enumerate_partitions(d, n))
    out[lambda] = dim_gl_irrep(n, lambda);
  return out;
}

}  // namespace duality
