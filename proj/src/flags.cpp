#include "duality/flags.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "duality/tableau.hpp"

namespace duality {

FlagType::FlagType(std::vector<int> s) : steps(std::move(s)) {
  for (int v : steps)
    if (v < 0) throw std::invalid_argument("FlagType: negative step");
}

int FlagType::total() const {
  return std::accumulate(steps.begin(), steps.end(), 0);
}

std::string FlagType::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < steps.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(steps[i]);
  }
  return s + ")";
}

std::vector<FlagType> enumerate_flag_types(int n, int d) {
  std::vector<FlagType> out;
  std::vector<int> acc;
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n - 1) {
      acc.push_back(remaining);
      out.emplace_back(acc);
      acc.pop_back();
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      acc.push_back(v);
      rec(pos + 1, remaining - v);
      acc.pop_back();
    }
  };
  if (n <= 0) throw std::invalid_argument("enumerate_flag_types: n must be positive");
  rec(0, d);
  return out;
}

Flag::Flag(int ambient, std::vector<Subspace> chain)
    : ambient_(ambient), chain_(std::move(chain)), zero_(Subspace::zero(ambient)) {
  if (chain_.empty()) throw std::invalid_argument("Flag: empty chain");
  for (size_t i = 0; i < chain_.size(); ++i) {
    if (chain_[i].ambient() != ambient_)
      throw std::invalid_argument("Flag: step " + std::to_string(i + 1) +
                                  " has wrong ambient dimension");
    const Subspace& prev = i == 0 ? zero_ : chain_[i - 1];
    if (intersect(prev, chain_[i]) != prev)
      throw std::invalid_argument("Flag: step " + std::to_string(i + 1) +
                                  " does not contain step " + std::to_string(i));
  }
  if (chain_.back().dim() != ambient_)
    throw std::invalid_argument("Flag: final step is not the full space");
}

const Subspace& Flag::step(int i) const {
  if (i == 0) return zero_;
  return chain_[static_cast<size_t>(i - 1)];
}

FlagType Flag::type() const {
  std::vector<int> t;
  for (int i = 1; i <= length(); ++i)
    t.push_back(step(i).dim() - step(i - 1).dim());
  return FlagType(std::move(t));
}

Flag Flag::transformed(const RationalMatrix& g) const {
  // Row vectors transform by g^T on the right.
  RationalMatrix gt = g.transpose();
  std::vector<Subspace> chain;
  chain.reserve(chain_.size());
  for (const auto& s : chain_)
    chain.push_back(Subspace::from_rows(ambient_, s.basis() * gt));
  return Flag(ambient_, std::move(chain));
}

CompositionMatrix orbit_invariant(const Flag& f, const Flag& g) {
  if (f.ambient() != g.ambient())
    throw std::invalid_argument("orbit_invariant: ambient dimensions differ");
  int n = f.length(), m = g.length();
  std::vector<std::vector<int>> dims(static_cast<size_t>(n + 1),
                                     std::vector<int>(static_cast<size_t>(m + 1)));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j)
      dims[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          intersect(f.step(i), g.step(j)).dim();
  CompositionMatrix a(n, m);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      int v = dims[static_cast<size_t>(i)][static_cast<size_t>(j)] -
              dims[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] -
              dims[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] +
              dims[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
      if (v < 0) throw std::logic_error("orbit_invariant: negative entry");
      a.at(i - 1, j - 1) = v;
    }
  }
  if (a.total() != f.ambient())
    throw std::logic_error("orbit_invariant: entries do not sum to d");
  return a;
}

OrbitCount count_orbits(int n, int m, int d) {
  if (n < 1 || m < 1 || d < 0)
    throw std::invalid_argument("count_orbits: need n,m >= 1 and d >= 0");
  OrbitCount oc;
  oc.count = binomial(static_cast<long>(n) * m + d - 1, d);
  oc.matrices = enumerate_composition_matrices(n, m, d);
  if (oc.count != Int(static_cast<long>(oc.matrices.size())))
    throw std::logic_error("count_orbits: closed form disagrees with enumeration");
  return oc;
}

long flag_variety_dim(const FlagType& t) {
  long dim = 0;
  int n = t.length();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      dim += static_cast<long>(t.steps[static_cast<size_t>(i)]) *
             t.steps[static_cast<size_t>(j)];
  return dim;
}

long nilpotent_orbit_dim(const Partition& lambda) {
  long d = lambda.size();
  long s = 0;
  for (int p : lambda.parts()) s += static_cast<long>(p) * p;
  long dim = d * d - s;
  if (dim < 0 || dim % 2 != 0)
    throw std::logic_error("nilpotent_orbit_dim: impossible value");
  return dim;
}

RationalMatrix nilpotent_of_type(const Partition& lambda) {
  int d = lambda.size();
  RationalMatrix x(d, d);
  Partition blocks = lambda.transpose();
  int offset = 0;
  for (int b : blocks.parts()) {
    for (int i = 0; i + 1 < b; ++i) x.at(offset + i, offset + i + 1) = 1;
    offset += b;
  }
  return x;
}

std::optional<long> spaltenstein_dim(const Partition& lambda, const FlagType& t) {
  if (lambda.size() != t.total())
    throw std::invalid_argument("spaltenstein_dim: |lambda| != |t|");
  if (kostka(lambda, t.steps) == 0) return std::nullopt;
  long v = flag_variety_dim(t) - nilpotent_orbit_dim(lambda) / 2;
  if (v < 0) throw std::logic_error("spaltenstein_dim: negative dimension");
  return v;
}

std::vector<CensusRow> component_census(int n, int m, int d, int k) {
  if (k < std::min(n, m))
    throw std::invalid_argument(
        "component_census: k < min(n,m); use orbit_stratum_table");
  auto oc = count_orbits(n, m, d);
  std::vector<CensusRow> rows;
  rows.reserve(oc.matrices.size());
  for (const auto& a : oc.matrices) {
    CensusRow r;
    r.matrix = a;
    r.row_weight = a.row_sums();
    r.col_weight = a.col_sums();
    r.dimension = flag_variety_dim(FlagType(r.row_weight)) +
                  flag_variety_dim(FlagType(r.col_weight));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<StratumRow> orbit_stratum_table(int n, int m, int d, int k) {
  int bound = std::min(std::min(n, m), k);
  std::vector<StratumRow> rows;
  for (const auto& lambda : enumerate_partitions(d, bound)) {
    for (const auto& t1 : enumerate_flag_types(n, d)) {
      auto s1 = spaltenstein_dim(lambda, t1);
      if (!s1) continue;
      for (const auto& t2 : enumerate_flag_types(m, d)) {
        auto s2 = spaltenstein_dim(lambda, t2);
        if (!s2) continue;
        rows.push_back({lambda, t1, t2, nilpotent_orbit_dim(lambda),
                        nilpotent_orbit_dim(lambda) + *s1 + *s2});
      }
    }
  }
  return rows;
}

VerificationReport dimension_identity_check(int n, int m, int d) {
  VerificationReport rep;
  rep.check = "dimension-identity";
  rep.params = {{"n", n}, {"m", m}, {"d", d}};
  int bound = std::min(n, m);
  for (const auto& lambda : enumerate_partitions(d, bound)) {
    for (const auto& t1 : enumerate_flag_types(n, d)) {
      auto s1 = spaltenstein_dim(lambda, t1);
      if (!s1) continue;
      for (const auto& t2 : enumerate_flag_types(m, d)) {
        auto s2 = spaltenstein_dim(lambda, t2);
        if (!s2) continue;
        long left = nilpotent_orbit_dim(lambda) + *s1 + *s2;
        long right = flag_variety_dim(t1) + flag_variety_dim(t2);
        rep.add("lambda=" + lambda.to_string() + " t1=" + t1.to_string() +
                    " t2=" + t2.to_string(),
                std::to_string(left), std::to_string(right));
      }
    }
  }
  return rep;
}

bool closure_order_leq(const Partition& lambda, const Partition& mu) {
  return dominance_leq(lambda.transpose(), mu.transpose());
}

RationalMatrix random_invertible(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  for (;;) {
    RationalMatrix g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g.at(i, j) = dist(rng);
    if (det(g) != 0) return g;
  }
}

Flag random_flag(const FlagType& t, std::mt19937_64& rng) {
  int d = t.total();
  RationalMatrix g = d == 0 ? RationalMatrix(0, 0) : random_invertible(d, rng);
  std::vector<Subspace> chain;
  int taken = 0;
  for (int s : t.steps) {
    taken += s;
    RationalMatrix rows(taken, d);
    for (int i = 0; i < taken; ++i)
      for (int j = 0; j < d; ++j) rows.at(i, j) = g.at(i, j);
    chain.push_back(Subspace::from_rows(d, rows));
  }
  return Flag(d, std::move(chain));
}

nlohmann::json flag_to_json(const Flag& f) {
  nlohmann::json j;
  j["d"] = f.ambient();
  j["steps"] = nlohmann::json::array();
  for (int i = 1; i <= f.length(); ++i) {
    nlohmann::json step = nlohmann::json::array();
    const auto& b = f.step(i).basis();
    for (int r = 0; r < b.rows(); ++r) {
      nlohmann::json vec = nlohmann::json::array();
      for (int c = 0; c < b.cols(); ++c) vec.push_back(rat_string(b.at(r, c)));
      step.push_back(vec);
    }
    j["steps"].push_back(step);
  }
  return j;
}

Flag flag_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("steps") ||
      !j["d"].is_number_integer() || !j["steps"].is_array())
    throw std::invalid_argument("flag JSON: expected {\"d\": int, \"steps\": [...]}");
  int d = j["d"].get<int>();
  if (d < 0) throw std::invalid_argument("flag JSON: negative ambient dimension");
  std::vector<Subspace> chain;
  int idx = 0;
  for (const auto& step : j["steps"]) {
    ++idx;
    if (!step.is_array())
      throw std::invalid_argument("flag JSON: step " + std::to_string(idx) +
                                  " is not an array of vectors");
    RationalMatrix rows(static_cast<int>(step.size()), d);
    int r = 0;
    for (const auto& vec : step) {
      if (!vec.is_array() || static_cast<int>(vec.size()) != d)
        throw std::invalid_argument("flag JSON: step " + std::to_string(idx) +
                                    " has a vector of wrong length");
      for (int c = 0; c < d; ++c) {
        const auto& cell = vec[static_cast<size_t>(c)];
        if (cell.is_string())
          rows.at(r, c) = parse_rat(cell.get<std::string>());
        else if (cell.is_number_integer())
          rows.at(r, c) = Rat(cell.get<long>());
        else
          throw std::invalid_argument("flag JSON: step " + std::to_string(idx) +
                                      " has a non-rational entry");
      }
      ++r;
    }
    Subspace s = Subspace::from_rows(d, rows);
    if (s.dim() != rows.rows())
      throw std::invalid_argument("flag JSON: step " + std::to_string(idx) +
                                  " basis rows are dependent");
    chain.push_back(std::move(s));
  }
  return Flag(d, std::move(chain));
}

nlohmann::json composition_matrix_to_json(const CompositionMatrix& a) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(a.at(i, c));
    j.push_back(row);
  }
  return j;
}

CompositionMatrix composition_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix JSON: expected non-empty array of arrays");
  std::vector<std::vector<int>> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty())
      throw std::invalid_argument("matrix JSON: expected non-empty rows");
    std::vector<int> r;
    for (const auto& cell : row) {
      if (!cell.is_number_integer())
        throw std::invalid_argument("matrix JSON: entries must be integers");
      r.push_back(cell.get<int>());
    }
    entries.push_back(std::move(r));
  }
  return CompositionMatrix(static_cast<int>(entries.size()),
                           static_cast<int>(entries[0].size()), entries);
}

}  // namespace duality
