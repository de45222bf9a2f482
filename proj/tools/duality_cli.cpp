// Command-line harness: verification suites, censuses, and the calculators
// on user data.  JSON goes to stdout, human summaries to stderr.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 budget exceeded,
// 3 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "duality/characters.hpp"
#include "duality/flags.hpp"
#include "duality/report.hpp"
#include "duality/rsk.hpp"
#include "duality/schur.hpp"
#include "duality/tableau.hpp"
#include "duality/tensor.hpp"

using namespace duality;
using nlohmann::json;

namespace {

struct Options {
  int n = 2, m = 2, d = 2;
  int k = -1, a = -1, b = -1;
  long long budget = kDefaultBudget;
  unsigned long long seed = 12345;
  bool csv = false;
};

std::string weight_pair_string(const std::vector<int>& r, const std::vector<int>& c) {
  std::string s = "(";
  for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  s += ")|(";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

VerificationReport suite_howe(const Options& o) {
  VerificationReport rep;
  rep.check = "howe";
  rep.params = {{"n", o.n}, {"m", o.m}, {"d", o.d}};
  Int lhs = binomial(static_cast<long>(o.n) * o.m + o.d - 1, o.d);
  Int rhs = 0;
  std::string sum;
  for (const auto& lam : enumerate_partitions(o.d, std::min(o.n, o.m))) {
    Int term = dim_gl_irrep(o.n, lam) * dim_gl_irrep(o.m, lam);
    rhs += term;
    if (!sum.empty()) sum += "+";
    sum += term.get_str();
  }
  rep.add("dim S^d = sum of products of irrep dims", lhs.get_str(), rhs.get_str());
  rep.notes["sum"] = lhs.get_str() + " = " + sum;

  SymmetricModel model(o.n, o.m, o.d, o.budget);
  auto hwv = joint_highest_weight_vectors(model);
  auto expected = expected_highest_weight_multiset(o.n, o.m, o.d);
  std::string got_str, want_str;
  for (const auto& h : hwv)
    got_str += weight_pair_string(h.weight_row, h.weight_col) + " ";
  for (const auto& [r, c] : expected) want_str += weight_pair_string(r, c) + " ";
  rep.add("joint highest weight multiset is {(lambda,lambda)}", got_str, want_str);
  return rep;
}

VerificationReport suite_schur(const Options& o) {
  VerificationReport rep;
  rep.check = "schur";
  rep.params = {{"n", o.n}, {"d", o.d}};
  auto check = commutant_check(o.n, o.n, o.d, o.budget);
  Int formula = 0;
  for (const auto& lam : enumerate_partitions(o.d, o.n)) {
    Int dim = dim_gl_irrep(o.n, lam);
    formula += dim * dim;
  }
  rep.add("commutant dimension = sum of squared irrep dims",
          std::to_string(check.orbit_count), formula.get_str());
  rep.add("commutant orbits match the matrix labels",
          check.fibers_match && check.orbit_count == check.label_count
              ? "true"
              : "false",
          "true");
  for (const auto& [lam, mult] : schur_duality_multiplicities(o.n, o.d, o.budget)) {
    rep.add("S_d multiplicity of S_" + lam.to_string() + " = dim V^n",
            mult.sym_mult.get_str(), dim_gl_irrep(o.n, lam).get_str());
    rep.add("gl multiplicity of " + lam.to_string() + " = f^lambda",
            mult.gl_mult.get_str(), dim_sym_irrep(lam).get_str());
  }
  return rep;
}

VerificationReport suite_springer(const Options& o) {
  VerificationReport rep;
  rep.check = "springer";
  rep.params = {{"d", o.d}};
  if (o.k >= 0) rep.params["k"] = o.k;
  if (o.k < 0) {
    Int total = 0;
    std::string sum;
    for (const auto& lam : enumerate_partitions(o.d)) {
      Int f2 = dim_sym_irrep(lam) * dim_sym_irrep(lam);
      total += f2;
      if (!sum.empty()) sum += "+";
      sum += f2.get_str();
    }
    rep.add("sum of squared f^lambda = d!", total.get_str(),
            factorial(o.d).get_str());
    rep.notes["sum"] = sum;
  } else {
    std::vector<int> w(static_cast<size_t>(o.d));
    std::iota(w.begin(), w.end(), 1);
    long count = 0;
    do {
      if (lds(Permutation(w)) <= o.k) ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    Int expected = 0;
    for (const auto& lam : enumerate_partitions(o.d, o.k))
      expected += dim_sym_irrep(lam) * dim_sym_irrep(lam);
    rep.add("permutations with lds <= k = truncated square sum",
            std::to_string(count), expected.get_str());
  }
  return rep;
}

VerificationReport suite_dimensions(const Options& o) {
  auto rep = dimension_identity_check(o.n, o.m, o.d);
  return rep;
}

VerificationReport suite_convolution(const Options& o) {
  VerificationReport rep;
  rep.check = "convolution";
  int k = o.k < 0 ? 2 : o.k;
  int a = o.a < 0 ? std::min(o.n, k) : o.a;
  int b = o.b < 0 ? std::min(k, o.m) : o.b;
  rep.params = {{"n", o.n}, {"m", o.m}, {"d", o.d}, {"k", k}, {"a", a}, {"b", b}};
  IntertwinerSpace x(o.n, k, o.d, a, o.budget);
  IntertwinerSpace y(k, o.m, o.d, b, o.budget);
  rep.add("dim of the left space", std::to_string(x.dim()),
          intertwiner_dim_formula(o.n, k, o.d, a).get_str());
  rep.add("dim of the right space", std::to_string(y.dim()),
          intertwiner_dim_formula(k, o.m, o.d, b).get_str());
  auto res = compose_intertwiners(x, y, o.budget);
  rep.add("isotypic support within min(n,a,k,b,m)",
          std::to_string(res.violations.size()) + " violations", "0 violations");
  rep.add("products lie in the min-truncated space",
          res.products_in_target ? "true" : "false", "true");
  rep.add("product span dimension", std::to_string(res.product_span_dim),
          intertwiner_dim_formula(o.n, o.m, o.d, res.min_trunc).get_str());
  rep.notes["pairs_checked"] = std::to_string(res.pairs_checked);
  return rep;
}

VerificationReport suite_zero_weight(const Options& o) {
  VerificationReport rep;
  rep.check = "zero-weight";
  rep.params = {{"n", o.n}, {"d", o.d}};
  auto bridge = zero_weight_bridge(o.n, o.d, o.budget);
  rep.add("bridge basis size", std::to_string(bridge.pairs.size()),
          int_pow(o.n, o.d).get_str());
  rep.add("gl actions intertwine", bridge.gl_intertwines ? "true" : "false",
          "true");
  rep.add("column permutation matches place permutation",
          bridge.sd_intertwines ? "true" : "false", "true");
  for (const auto& lam : enumerate_partitions(o.d)) {
    auto character = weyl_group_action_on_zero_weight(lam, o.budget);
    std::string got, want;
    for (const auto& rho : enumerate_partitions(o.d)) {
      got += character.at(rho).get_str() + " ";
      want += sym_character(lam, rho).get_str() + " ";
    }
    rep.add("zero-weight character of " + lam.to_string() + " is chi^lambda",
            got, want);
  }
  return rep;
}

VerificationReport run_suite(const std::string& name, const Options& o) {
  if (name == "howe") return suite_howe(o);
  if (name == "schur") return suite_schur(o);
  if (name == "springer") return suite_springer(o);
  if (name == "dimensions") return suite_dimensions(o);
  if (name == "convolution") return suite_convolution(o);
  if (name == "zero-weight") return suite_zero_weight(o);
  if (name == "ginzburg") return verify_ginzburg_surjection(o.n, o.d, o.budget);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

int cmd_verify(const std::string& suite, const Options& o) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep = run_suite(suite, o);
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  std::cout << rep.to_json_string() << "\n";
  std::cerr << rep.summary() << "\n";
  return rep.pass() ? 0 : 1;
}

int cmd_census(const Options& o) {
  int k = o.k < 0 ? std::min(o.n, o.m) : o.k;
  Int size = binomial(static_cast<long>(o.n) * o.m + o.d - 1, o.d);
  if (size > to_int(o.budget))
    throw budget_error("census: " + size.get_str() + " rows exceed budget " +
                       std::to_string(o.budget));
  json out;
  out["schema"] = 1;
  out["params"] = {{"n", o.n}, {"m", o.m}, {"d", o.d}, {"k", k}};
  if (k >= std::min(o.n, o.m)) {
    auto rows = component_census(o.n, o.m, o.d, k);
    Int expected = count_orbits(o.n, o.m, o.d).count;
    if (o.csv) {
      std::cout << "matrix,row_weight,col_weight,dimension\n";
      for (const auto& r : rows) {
        std::string mat;
        for (int i = 0; i < r.matrix.rows(); ++i) {
          if (i) mat += ";";
          for (int j = 0; j < r.matrix.cols(); ++j)
            mat += (j ? " " : "") + std::to_string(r.matrix.at(i, j));
        }
        std::string rw, cw;
        for (size_t i = 0; i < r.row_weight.size(); ++i)
          rw += (i ? " " : "") + std::to_string(r.row_weight[i]);
        for (size_t i = 0; i < r.col_weight.size(); ++i)
          cw += (i ? " " : "") + std::to_string(r.col_weight[i]);
        std::cout << mat << "," << rw << "," << cw << "," << r.dimension << "\n";
      }
      std::cout << "total," << rows.size() << ",expected," << expected.get_str()
                << "\n";
      std::cerr << "census: " << rows.size() << " components (expected "
                << expected.get_str() << ")\n";
      return Int(static_cast<long>(rows.size())) == expected ? 0 : 1;
    }
    out["mode"] = "components";
    out["rows"] = json::array();
    for (const auto& r : rows) {
      json row;
      row["matrix"] = composition_matrix_to_json(r.matrix);
      row["row_weight"] = r.row_weight;
      row["col_weight"] = r.col_weight;
      row["dimension"] = r.dimension;
      out["rows"].push_back(row);
    }
    out["totals"] = {{"components", rows.size()},
                     {"count_orbits", expected.get_str()},
                     {"match", Int(static_cast<long>(rows.size())) == expected}};
    std::cout << out.dump() << "\n";
    std::cerr << "census: " << rows.size() << " components (expected "
              << expected.get_str() << ")\n";
    return out["totals"]["match"].get<bool>() ? 0 : 1;
  }
  // Truncated case: only the orbit-stratum dimension table is asserted.
  auto rows = orbit_stratum_table(o.n, o.m, o.d, k);
  if (o.csv) {
    std::cout << "lambda,t1,t2,orbit_dim,stratum_dim\n";
    for (const auto& r : rows)
      std::cout << r.lambda.to_string() << "," << r.t1.to_string() << ","
                << r.t2.to_string() << "," << r.orbit_dim << ","
                << r.stratum_dim << "\n";
    std::cerr << "census (strata): " << rows.size() << " rows\n";
    return 0;
  }
  out["mode"] = "orbit-strata";
  out["rows"] = json::array();
  for (const auto& r : rows) {
    json row;
    row["lambda"] = r.lambda.parts();
    row["t1"] = r.t1.steps;
    row["t2"] = r.t2.steps;
    row["orbit_dim"] = r.orbit_dim;
    row["stratum_dim"] = r.stratum_dim;
    out["rows"].push_back(row);
  }
  std::cout << out.dump() << "\n";
  std::cerr << "census (strata): " << rows.size() << " rows\n";
  return 0;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("bad JSON in '" + path + "': " + e.what());
  }
  return j;
}

int cmd_orbit_invariant(const std::string& path, int check_invariance,
                        const Options& o) {
  json in = load_json_file(path);
  if (!in.is_object() || !in.contains("left") || !in.contains("right"))
    throw std::invalid_argument("expected {\"left\": flag, \"right\": flag}");
  Flag left = flag_from_json(in["left"]);
  Flag right = flag_from_json(in["right"]);
  if (left.ambient() != right.ambient())
    throw std::invalid_argument("flags have different ambient dimensions");
  CompositionMatrix a = orbit_invariant(left, right);
  json out;
  out["schema"] = 1;
  out["matrix"] = composition_matrix_to_json(a);
  bool invariant = true;
  if (check_invariance > 0) {
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < check_invariance; ++i) {
      RationalMatrix g = random_invertible(left.ambient(), rng);
      if (orbit_invariant(left.transformed(g), right.transformed(g)) != a) {
        invariant = false;
        break;
      }
    }
    out["invariance"] = {{"trials", check_invariance}, {"invariant", invariant}};
  }
  std::cout << out.dump() << "\n";
  std::cerr << "orbit-invariant: " << a.to_string()
            << (check_invariance > 0
                    ? (invariant ? " (invariance confirmed)" : " (INVARIANCE FAILED)")
                    : "")
            << "\n";
  return invariant ? 0 : 1;
}

int cmd_rsk(const std::string& path) {
  json in = load_json_file(path);
  CompositionMatrix a = composition_matrix_from_json(in);
  auto [p, q] = rsk(a);
  if (inverse_rsk(p, q, a.rows(), a.cols()) != a)
    throw std::logic_error("rsk: roundtrip self-check failed");
  json out;
  out["schema"] = 1;
  out["P"] = p.rows();
  out["Q"] = q.rows();
  out["shape"] = p.shape().parts();
  std::cout << out.dump() << "\n";
  std::cerr << "rsk: shape " << p.shape().to_string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of tensor-space dualities at desk scale"};
  app.require_subcommand(1);
  app.fallthrough();  // --budget/--seed may follow the subcommand

  Options o;
  if (const char* env = std::getenv("DUALITY_BUDGET")) {
    try {
      o.budget = std::stoll(env);
    } catch (...) {
      std::cerr << "warning: ignoring malformed DUALITY_BUDGET\n";
    }
  }
  app.add_option("--budget", o.budget, "dimension budget for model builders");
  app.add_option("--seed", o.seed, "seed for randomized checks");

  auto* verify = app.add_subcommand(
      "verify", "run a verification suite and emit a JSON report");
  std::string suite;
  verify->add_option("suite", suite,
                     "howe|schur|springer|dimensions|convolution|zero-weight|ginzburg")
      ->required();
  verify->add_option("--n", o.n, "first rank");
  verify->add_option("--m", o.m, "second rank");
  verify->add_option("--d", o.d, "degree");
  verify->add_option("--k", o.k, "truncation / middle rank (suite dependent)");
  verify->add_option("--a", o.a, "left truncation (convolution)");
  verify->add_option("--b", o.b, "right truncation (convolution)");

  auto* census = app.add_subcommand("census", "component census of the correspondence variety");
  census->add_option("--n", o.n, "row rank");
  census->add_option("--m", o.m, "column rank");
  census->add_option("--d", o.d, "degree");
  census->add_option("--k", o.k, "nilpotency truncation (default min(n,m))");
  bool force_json = false;
  census->add_flag("--json", force_json, "JSON output (the default)");
  census->add_flag("--csv", o.csv, "CSV instead of JSON");

  auto* orbit = app.add_subcommand("orbit-invariant",
                                   "orbit invariant of a flag pair from a JSON file");
  std::string flag_file;
  int check_invariance = 0;
  orbit->add_option("file", flag_file, "JSON file with {\"left\": flag, \"right\": flag}")
      ->required();
  orbit->add_option("--check-invariance", check_invariance,
                    "re-check under this many random group elements");

  auto* rsk_cmd = app.add_subcommand("rsk", "tableau pair of a matrix from a JSON file");
  std::string rsk_file;
  rsk_cmd->add_option("file", rsk_file, "JSON array-of-arrays of ints")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  if (force_json) o.csv = false;

  try {
    if (*verify) return cmd_verify(suite, o);
    if (*census) return cmd_census(o);
    if (*orbit) return cmd_orbit_invariant(flag_file, check_invariance, o);
    if (*rsk_cmd) return cmd_rsk(rsk_file);
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
