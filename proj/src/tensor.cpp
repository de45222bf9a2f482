#include "duality/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace duality {

namespace {

void check_budget(const Int& dim, long long budget, const char* what) {
  if (dim > to_int(budget))
    throw budget_error(std::string(what) + ": dimension " + dim.get_str() +
                       " exceeds budget " + std::to_string(budget));
}

std::vector<std::pair<long, Rat>> collect(std::map<long, Rat>& acc) {
  std::vector<std::pair<long, Rat>> out;
  for (auto& [k, v] : acc)
    if (v != 0) out.emplace_back(k, v);
  return out;
}

}  // namespace

TensorSpace::TensorSpace(int n, int d, long long budget) : n_(n), d_(d) {
  if (n < 1 || d < 1)
    throw std::invalid_argument("TensorSpace: need n >= 1 and d >= 1");
  Int dim = int_pow(n, d);
  check_budget(dim, budget, "TensorSpace");
  dim_ = dim.get_si();
}

std::vector<int> TensorSpace::word_at(long idx) const {
  std::vector<int> w(static_cast<size_t>(d_));
  for (int t = d_ - 1; t >= 0; --t) {
    w[static_cast<size_t>(t)] = static_cast<int>(idx % n_) + 1;
    idx /= n_;
  }
  return w;
}

long TensorSpace::index_of(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) != d_)
    throw std::invalid_argument("TensorSpace: word length != d");
  long idx = 0;
  for (int t = 0; t < d_; ++t) {
    int l = word[static_cast<size_t>(t)];
    if (l < 1 || l > n_) throw std::invalid_argument("TensorSpace: letter out of range");
    idx = idx * n_ + (l - 1);
  }
  return idx;
}

std::string TensorSpace::label(long idx) const {
  auto w = word_at(idx);
  std::string s = "e[";
  for (size_t t = 0; t < w.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(w[t]);
  }
  return s + "]";
}

std::vector<int> TensorSpace::content_of(long idx) const {
  std::vector<int> c(static_cast<size_t>(n_), 0);
  for (int l : word_at(idx)) ++c[static_cast<size_t>(l - 1)];
  return c;
}

std::vector<std::pair<long, Rat>> TensorSpace::apply_gl(int a, int b,
                                                        long idx) const {
  if (a < 1 || a > n_ || b < 1 || b > n_)
    throw std::invalid_argument("TensorSpace::apply_gl: generator out of range");
  std::map<long, Rat> acc;
  std::vector<int> w = word_at(idx);
  for (int t = 0; t < d_; ++t) {
    if (w[static_cast<size_t>(t)] != b) continue;
    w[static_cast<size_t>(t)] = a;
    acc[index_of(w)] += 1;
    w[static_cast<size_t>(t)] = b;
  }
  return collect(acc);
}

RationalMatrix TensorSpace::gl_generator(int a, int b) const {
  RationalMatrix m(static_cast<int>(dim_), static_cast<int>(dim_));
  for (long idx = 0; idx < dim_; ++idx)
    for (const auto& [target, coeff] : apply_gl(a, b, idx))
      m.at(static_cast<int>(target), static_cast<int>(idx)) += coeff;
  return m;
}

RationalMatrix TensorSpace::place_permutation(const Permutation& s) const {
  if (s.degree() != d_)
    throw std::invalid_argument("TensorSpace: permutation degree != d");
  RationalMatrix m(static_cast<int>(dim_), static_cast<int>(dim_));
  for (long idx = 0; idx < dim_; ++idx) {
    std::vector<int> w = word_at(idx);
    std::vector<int> u(static_cast<size_t>(d_));
    for (int t = 1; t <= d_; ++t) u[static_cast<size_t>(s(t) - 1)] = w[static_cast<size_t>(t - 1)];
    m.at(static_cast<int>(index_of(u)), static_cast<int>(idx)) = 1;
  }
  return m;
}

RationalMatrix TensorSpace::transposition(int i) const {
  if (i < 1 || i >= d_)
    throw std::invalid_argument("TensorSpace: transposition index out of range");
  std::vector<int> w(static_cast<size_t>(d_));
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
  return place_permutation(Permutation(std::move(w)));
}

std::map<std::vector<int>, std::vector<long>> TensorSpace::weight_blocks() const {
  std::map<std::vector<int>, std::vector<long>> blocks;
  for (long idx = 0; idx < dim_; ++idx) blocks[content_of(idx)].push_back(idx);
  return blocks;
}

SymmetricModel::SymmetricModel(int n, int m, int d, long long budget)
    : n_(n), m_(m), d_(d) {
  if (n < 1 || m < 1 || d < 1)
    throw std::invalid_argument("SymmetricModel: need n,m >= 1 and d >= 1");
  check_budget(binomial(static_cast<long>(n) * m + d - 1, d), budget,
               "SymmetricModel");
  basis_ = enumerate_composition_matrices(n, m, d);
  for (size_t i = 0; i < basis_.size(); ++i) {
    std::vector<int> key;
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < m_; ++c) key.push_back(basis_[i].at(r, c));
    index_[key] = static_cast<long>(i);
  }
}

long SymmetricModel::index_of(const CompositionMatrix& a) const {
  std::vector<int> key;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < m_; ++c) key.push_back(a.at(r, c));
  auto it = index_.find(key);
  if (it == index_.end())
    throw std::invalid_argument("SymmetricModel: monomial not in basis");
  return it->second;
}

std::string SymmetricModel::label(long idx) const {
  return "z" + monomial(idx).to_string();
}

std::pair<std::vector<int>, std::vector<int>> SymmetricModel::weight_of(
    long idx) const {
  const auto& a = monomial(idx);
  return {a.row_sums(), a.col_sums()};
}

std::vector<std::pair<long, Rat>> SymmetricModel::apply_row(int a, int b,
                                                            long idx) const {
  if (a < 1 || a > n_ || b < 1 || b > n_)
    throw std::invalid_argument("SymmetricModel::apply_row: generator out of range");
  std::map<long, Rat> acc;
  CompositionMatrix A = monomial(idx);
  for (int j = 0; j < m_; ++j) {
    int c = A.at(b - 1, j);
    if (c == 0) continue;
    A.at(b - 1, j) -= 1;
    A.at(a - 1, j) += 1;
    acc[index_of(A)] += c;
    A.at(a - 1, j) -= 1;
    A.at(b - 1, j) += 1;
  }
  return collect(acc);
}

std::vector<std::pair<long, Rat>> SymmetricModel::apply_col(int a, int b,
                                                            long idx) const {
  if (a < 1 || a > m_ || b < 1 || b > m_)
    throw std::invalid_argument("SymmetricModel::apply_col: generator out of range");
  std::map<long, Rat> acc;
  CompositionMatrix A = monomial(idx);
  for (int i = 0; i < n_; ++i) {
    int c = A.at(i, b - 1);
    if (c == 0) continue;
    A.at(i, b - 1) -= 1;
    A.at(i, a - 1) += 1;
    acc[index_of(A)] += c;
    A.at(i, a - 1) -= 1;
    A.at(i, b - 1) += 1;
  }
  return collect(acc);
}

RationalMatrix SymmetricModel::row_generator(int a, int b) const {
  RationalMatrix m(static_cast<int>(dim()), static_cast<int>(dim()));
  for (long idx = 0; idx < dim(); ++idx)
    for (const auto& [target, coeff] : apply_row(a, b, idx))
      m.at(static_cast<int>(target), static_cast<int>(idx)) += coeff;
  return m;
}

RationalMatrix SymmetricModel::col_generator(int a, int b) const {
  RationalMatrix m(static_cast<int>(dim()), static_cast<int>(dim()));
  for (long idx = 0; idx < dim(); ++idx)
    for (const auto& [target, coeff] : apply_col(a, b, idx))
      m.at(static_cast<int>(target), static_cast<int>(idx)) += coeff;
  return m;
}

namespace {

// Kernel of a stack of sparse operators restricted to one weight block.
// ops(local column) yields the global sparse image of that basis vector.
std::vector<std::vector<Rat>> block_kernel(
    const std::vector<long>& block,
    const std::vector<std::function<std::vector<std::pair<long, Rat>>(long)>>&
        ops) {
  int cols = static_cast<int>(block.size());
  // Row coordinates: one per (op, touched global index).
  std::vector<std::vector<std::pair<int, Rat>>> sparse_rows_by_col(
      static_cast<size_t>(cols));
  int next_row = 0;
  std::vector<std::map<long, int>> row_id(ops.size());
  for (int c = 0; c < cols; ++c) {
    for (size_t o = 0; o < ops.size(); ++o) {
      for (const auto& [target, coeff] : ops[o](block[static_cast<size_t>(c)])) {
        auto [it, inserted] = row_id[o].try_emplace(target, next_row);
        if (inserted) ++next_row;
        sparse_rows_by_col[static_cast<size_t>(c)].emplace_back(it->second, coeff);
      }
    }
  }
  RationalMatrix m(next_row, cols);
  for (int c = 0; c < cols; ++c)
    for (const auto& [r, coeff] : sparse_rows_by_col[static_cast<size_t>(c)])
      m.at(r, c) += coeff;
  RationalMatrix k = kernel_basis(m);
  std::vector<std::vector<Rat>> out;
  for (int i = 0; i < k.rows(); ++i) {
    std::vector<Rat> v(static_cast<size_t>(cols));
    for (int j = 0; j < cols; ++j) v[static_cast<size_t>(j)] = k.at(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<HighestWeightVector> joint_highest_weight_vectors(
    const SymmetricModel& model) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<long>>
      blocks;
  for (long idx = 0; idx < model.dim(); ++idx)
    blocks[model.weight_of(idx)].push_back(idx);

  std::vector<std::function<std::vector<std::pair<long, Rat>>(long)>> ops;
  for (int a = 1; a < model.n(); ++a)
    ops.push_back([&model, a](long idx) { return model.apply_row(a, a + 1, idx); });
  for (int b = 1; b < model.m(); ++b)
    ops.push_back([&model, b](long idx) { return model.apply_col(b, b + 1, idx); });

  std::vector<HighestWeightVector> out;
  for (const auto& [weight, block] : blocks) {
    for (auto& v : block_kernel(block, ops)) {
      HighestWeightVector h;
      h.weight_row = weight.first;
      h.weight_col = weight.second;
      for (size_t j = 0; j < block.size(); ++j)
        if (v[j] != 0) h.coeffs.emplace_back(block[j], v[j]);
      out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end(), [](const HighestWeightVector& a,
                                       const HighestWeightVector& b) {
    return std::tie(a.weight_row, a.weight_col, a.coeffs) <
           std::tie(b.weight_row, b.weight_col, b.coeffs);
  });
  return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>>
expected_highest_weight_multiset(int n, int m, int d) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> expected;
  for (const auto& lambda : enumerate_partitions(d, std::min(n, m))) {
    std::vector<int> row(static_cast<size_t>(n), 0), col(static_cast<size_t>(m), 0);
    for (int i = 0; i < lambda.length(); ++i) {
      row[static_cast<size_t>(i)] = lambda[i];
      col[static_cast<size_t>(i)] = lambda[i];
    }
    expected.emplace_back(std::move(row), std::move(col));
  }
  std::sort(expected.begin(), expected.end());
  return expected;
}

std::map<Partition, SchurMultiplicity> schur_duality_multiplicities(
    int n, int d, long long budget) {
  TensorSpace space(n, d, budget);
  std::map<Partition, SchurMultiplicity> out;
  Int order = factorial(d);
  auto classes = enumerate_partitions(d);
  for (const auto& lambda : enumerate_partitions(d, n)) {
    // Character route: <trace of the place action, chi^lambda>; the trace of
    // a place permutation of cycle type rho is n^{#cycles}.
    Int acc = 0;
    for (const auto& rho : classes)
      acc += conjugacy_class_size(rho) * int_pow(n, rho.length()) *
             sym_character(lambda, rho);
    Int sym_mult, rem;
    mpz_tdiv_qr(sym_mult.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(),
                order.get_mpz_t());
    if (rem != 0)
      throw std::logic_error("schur_duality_multiplicities: non-integral multiplicity");

    // Kernel route: highest weight vectors of weight lambda.
    std::vector<int> content(static_cast<size_t>(n), 0);
    for (int i = 0; i < lambda.length(); ++i)
      content[static_cast<size_t>(i)] = lambda[i];
    std::vector<long> block;
    for (long idx = 0; idx < space.dim(); ++idx)
      if (space.content_of(idx) == content) block.push_back(idx);
    std::vector<std::function<std::vector<std::pair<long, Rat>>(long)>> ops;
    for (int a = 1; a < n; ++a)
      ops.push_back([&space, a](long idx) { return space.apply_gl(a, a + 1, idx); });
    Int gl_mult(static_cast<long>(block_kernel(block, ops).size()));

    out[lambda] = {sym_mult, gl_mult};
  }
  return out;
}

ZeroWeightBridge zero_weight_bridge(int n, int d, long long budget) {
  SymmetricModel model(n, d, d, budget);
  TensorSpace space(n, d, budget);
  ZeroWeightBridge bridge;

  std::vector<long> sub;                      // model indices with unit column sums
  std::map<long, long> model_to_word;         // model index -> word index
  std::vector<long> word_to_model(static_cast<size_t>(space.dim()), -1);
  for (long idx = 0; idx < model.dim(); ++idx) {
    const auto& a = model.monomial(idx);
    auto cs = a.col_sums();
    if (!std::all_of(cs.begin(), cs.end(), [](int c) { return c == 1; })) continue;
    std::vector<int> word(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < n; ++i)
        if (a.at(i, j) == 1) word[static_cast<size_t>(j)] = i + 1;
    long widx = space.index_of(word);
    sub.push_back(idx);
    model_to_word[idx] = widx;
    word_to_model[static_cast<size_t>(widx)] = idx;
    bridge.pairs.emplace_back(a, word);
  }
  if (static_cast<long>(sub.size()) != space.dim())
    throw std::logic_error("zero_weight_bridge: sub-basis size mismatch");

  auto same_image = [](std::vector<std::pair<long, Rat>> a,
                       std::vector<std::pair<long, Rat>> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };

  // gl_n equivariance, generator by generator: transport the polarization
  // image through the bijection and compare with the Leibniz image.
  bridge.gl_intertwines = true;
  for (int a = 1; a <= n && bridge.gl_intertwines; ++a) {
    for (int b = 1; b <= n && bridge.gl_intertwines; ++b) {
      for (long idx : sub) {
        std::vector<std::pair<long, Rat>> through;
        for (const auto& [target, coeff] : model.apply_row(a, b, idx))
          through.emplace_back(model_to_word.at(target), coeff);
        auto direct = space.apply_gl(a, b, model_to_word.at(idx));
        if (!same_image(std::move(through), std::move(direct))) {
          bridge.gl_intertwines = false;
          break;
        }
      }
    }
  }

  // Column permutation on monomials against place permutation on words.
  bridge.sd_intertwines = true;
  for (int i = 1; i < d && bridge.sd_intertwines; ++i) {
    for (long idx : sub) {
      CompositionMatrix a = model.monomial(idx);
      for (int r = 0; r < n; ++r) {
        int tmp = a.at(r, i - 1);
        a.at(r, i - 1) = a.at(r, i);
        a.at(r, i) = tmp;
      }
      long swapped_model = model.index_of(a);
      std::vector<int> w = space.word_at(model_to_word.at(idx));
      std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
      if (model_to_word.at(swapped_model) != space.index_of(w)) {
        bridge.sd_intertwines = false;
        break;
      }
    }
  }
  return bridge;
}

namespace {

// All permutations of {1..d} preserving each listed cell group setwise,
// as words; optionally with signs.
void group_perms(const std::vector<std::vector<int>>& groups, int d,
                 std::vector<std::pair<Permutation, int>>& out) {
  std::vector<int> word(static_cast<size_t>(d));
  std::iota(word.begin(), word.end(), 1);
  out.clear();
  out.emplace_back(Permutation(word), 1);
  for (const auto& g : groups) {
    std::vector<int> perm(g.begin(), g.end());
    std::sort(perm.begin(), perm.end());
    std::vector<std::pair<Permutation, int>> next;
    do {
      // Sign of the arrangement relative to sorted order.
      int inv = 0;
      for (size_t x = 0; x < perm.size(); ++x)
        for (size_t y = x + 1; y < perm.size(); ++y)
          if (perm[x] > perm[y]) ++inv;
      std::vector<int> w(static_cast<size_t>(d));
      std::iota(w.begin(), w.end(), 1);
      for (size_t x = 0; x < g.size(); ++x)
        w[static_cast<size_t>(g[x] - 1)] = perm[x];
      Permutation p(std::move(w));
      int sign = inv % 2 == 0 ? 1 : -1;
      for (const auto& [q, s] : out) next.emplace_back(p.compose(q), s * sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // next_permutation leaves perm sorted again; collect all arrangements.
    out = std::move(next);
  }
}

Permutation class_representative(const CycleType& rho) {
  std::vector<int> w;
  int start = 1;
  for (int c : rho.parts()) {
    for (int x = start; x < start + c - 1; ++x) w.push_back(x + 1);
    w.push_back(start);
    start += c;
  }
  return Permutation(std::move(w));
}

}  // namespace

std::map<CycleType, Int> weyl_group_action_on_zero_weight(
    const Partition& lambda, long long budget) {
  int d = lambda.size();
  if (d < 1) throw std::invalid_argument("weyl_group_action_on_zero_weight: empty shape");
  check_budget(factorial(d), budget, "weyl_group_action_on_zero_weight");

  // Zero-weight basis: permutation words of length d.
  std::vector<std::vector<int>> words;
  {
    std::vector<int> w(static_cast<size_t>(d));
    std::iota(w.begin(), w.end(), 1);
    do words.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
  }
  std::map<std::vector<int>, int> word_index;
  for (size_t i = 0; i < words.size(); ++i) word_index[words[i]] = static_cast<int>(i);
  int N = static_cast<int>(words.size());

  // Canonical tableau of shape lambda: labels 1..d row by row.
  std::vector<std::vector<int>> row_groups, col_groups;
  {
    int next = 1;
    for (int r = 0; r < lambda.length(); ++r) {
      std::vector<int> row;
      for (int c = 0; c < lambda[r]; ++c) row.push_back(next++);
      row_groups.push_back(std::move(row));
    }
    Partition t = lambda.transpose();
    for (int c = 0; c < t.length(); ++c) {
      std::vector<int> col;
      int label = c + 1;
      for (int r = 0; r < t[c]; ++r) {
        col.push_back(label);
        label += lambda[r];
      }
      col_groups.push_back(std::move(col));
    }
  }
  std::vector<std::pair<Permutation, int>> row_perms, col_perms;
  group_perms(row_groups, d, row_perms);
  group_perms(col_groups, d, col_perms);

  auto place = [&](const Permutation& s, const std::vector<int>& w) {
    std::vector<int> u(static_cast<size_t>(d));
    for (int t = 1; t <= d; ++t)
      u[static_cast<size_t>(s(t) - 1)] = w[static_cast<size_t>(t - 1)];
    return u;
  };

  // Unnormalized Young symmetrizer (column antisymmetrizer after row
  // symmetrizer) restricted to the zero-weight block.
  RationalMatrix symmetrizer(N, N);
  for (const auto& [q, sq] : col_perms) {
    for (const auto& [p, sp] : row_perms) {
      Permutation qp = q.compose(p);
      (void)sp;  // row part carries no sign
      for (int widx = 0; widx < N; ++widx) {
        auto u = place(qp, words[static_cast<size_t>(widx)]);
        symmetrizer.at(word_index.at(u), widx) += sq;
      }
    }
  }

  // Image basis as columns.
  RationalMatrix image_rows = rref(symmetrizer.transpose());
  int f = 0;
  for (int i = 0; i < image_rows.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < N; ++j)
      if (image_rows.at(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++f;
  }
  if (Int(f) != dim_sym_irrep(lambda))
    throw std::logic_error("weyl_group_action_on_zero_weight: image rank != f^lambda");
  RationalMatrix basis_cols(N, f);
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < N; ++j) basis_cols.at(j, i) = image_rows.at(i, j);

  std::map<CycleType, Int> character;
  for (const auto& rho : enumerate_partitions(d)) {
    Permutation sigma = class_representative(rho);
    // Value action: relabel letters through sigma.
    RationalMatrix moved(N, f);
    for (int c = 0; c < f; ++c) {
      for (int j = 0; j < N; ++j) {
        if (basis_cols.at(j, c) == 0) continue;
        std::vector<int> u(static_cast<size_t>(d));
        for (int t = 0; t < d; ++t)
          u[static_cast<size_t>(t)] = sigma(words[static_cast<size_t>(j)][static_cast<size_t>(t)]);
        moved.at(word_index.at(u), c) += basis_cols.at(j, c);
      }
    }
    // Solve basis_cols * M = moved; consistency certifies invariance.
    RationalMatrix aug(N, 2 * f);
    for (int j = 0; j < N; ++j) {
      for (int c = 0; c < f; ++c) {
        aug.at(j, c) = basis_cols.at(j, c);
        aug.at(j, f + c) = moved.at(j, c);
      }
    }
    RationalMatrix e = rref(aug);
    for (int i = f; i < e.rows(); ++i)
      for (int j = 0; j < 2 * f; ++j)
        if (e.at(i, j) != 0)
          throw std::logic_error(
              "weyl_group_action_on_zero_weight: image not invariant");
    Rat trace(0);
    for (int c = 0; c < f; ++c) trace += e.at(c, f + c);
    if (trace.get_den() != 1)
      throw std::logic_error("weyl_group_action_on_zero_weight: non-integral trace");
    character[rho] = Int(trace.get_num());
  }
  return character;
}

}  // namespace duality
