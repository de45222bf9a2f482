#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "duality/characters.hpp"
#include "duality/partition.hpp"
#include "duality/tableau.hpp"
#include "oracles.hpp"

using namespace duality;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(P({-1}), std::invalid_argument);
  CHECK(P({}).size() == 0);
  CHECK(P({3, 1}).size() == 4);
  CHECK(P({3, 1})[0] == 3);
  CHECK(P({3, 1})[5] == 0);  // zero-padded access
}

TEST_CASE("enumerate_partitions matches the spec examples") {
  CHECK(enumerate_partitions(2, 2) == std::vector<Partition>{P({2}), P({1, 1})});
  // Frozen from the brute-force enumeration of weakly decreasing sequences.
  CHECK(enumerate_partitions(4, 2) ==
        std::vector<Partition>{P({4}), P({3, 1}), P({2, 2})});
  CHECK(enumerate_partitions(6).size() == 11);
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(0)[0] == P({}));
}

TEST_CASE("enumerate_partitions against brute force and Euler recurrence") {
  for (int d = 0; d <= 8; ++d) {
    for (int k = 0; k <= d; ++k) {
      auto got = enumerate_partitions(d, k);
      auto expected = oracles::brute_partitions(d, k);
      REQUIRE(got.size() == expected.size());
      std::set<std::vector<int>> got_set;
      for (const auto& p : got) got_set.insert(p.parts());
      CHECK(got_set == expected);
    }
    CHECK(Int(static_cast<long>(enumerate_partitions(d).size())) ==
          oracles::euler_partition_count(d));
  }
}

TEST_CASE("enumeration order is reverse lexicographic") {
  for (int d = 0; d <= 7; ++d) {
    auto ps = enumerate_partitions(d);
    for (size_t i = 1; i < ps.size(); ++i)
      CHECK(ps[i - 1].parts() > ps[i].parts());
  }
}

TEST_CASE("transpose") {
  CHECK(P({2, 1}).transpose() == P({2, 1}));
  CHECK(P({3, 1}).transpose() == P({2, 1, 1}));
  CHECK(P({5}).transpose() == P({1, 1, 1, 1, 1}));
  for (int d = 0; d <= 8; ++d) {
    for (const auto& lam : enumerate_partitions(d)) {
      CHECK(lam.transpose().size() == lam.size());
      CHECK(lam.transpose().transpose() == lam);
    }
  }
}

TEST_CASE("dim_sym_irrep") {
  CHECK(dim_sym_irrep(P({2, 1})) == 2);  // hooks 3,1,1
  for (int d = 1; d <= 8; ++d) CHECK(dim_sym_irrep(P({d})) == 1);
  CHECK(dim_sym_irrep(P({})) == 1);
  // 1 + 9 + 4 + 9 + 1 = 24
  Int total = 0;
  for (const auto& lam : enumerate_partitions(4))
    total += dim_sym_irrep(lam) * dim_sym_irrep(lam);
  CHECK(total == 24);
}

TEST_CASE("sum of squares of f^lambda is d! for d <= 8") {
  for (int d = 0; d <= 8; ++d) {
    Int total = 0;
    for (const auto& lam : enumerate_partitions(d)) {
      Int f = dim_sym_irrep(lam);
      total += f * f;
    }
    CHECK(total == factorial(d));
  }
}

TEST_CASE("dim_gl_irrep") {
  CHECK(dim_gl_irrep(2, P({2})) == 3);
  CHECK(dim_gl_irrep(3, P({2})) == 6);
  for (int n = 1; n <= 6; ++n) CHECK(dim_gl_irrep(n, P({1})) == n);
  CHECK(dim_gl_irrep(1, P({1, 1})) == 0);  // too many parts
  CHECK(dim_gl_irrep(3, P({})) == 1);
}

TEST_CASE("Weyl formula equals tableau enumeration") {
  for (int d = 0; d <= 6; ++d) {
    for (const auto& lam : enumerate_partitions(d)) {
      for (int n = 1; n <= 4; ++n) {
        Int by_count(static_cast<long>(semistandard_tableaux(lam, n).size()));
        CHECK(dim_gl_irrep(n, lam) == by_count);
      }
    }
  }
}

TEST_CASE("library tableau enumeration against the assignment oracle") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& lam : enumerate_partitions(d)) {
      for (int n = 1; n <= 3; ++n) {
        CHECK(static_cast<long>(semistandard_tableaux(lam, n).size()) ==
              oracles::brute_ssyt_count(lam.parts(), n));
      }
    }
  }
}

TEST_CASE("tableau validation") {
  CHECK_NOTHROW(Tableau({{1, 1, 2}, {2, 3}}));
  CHECK_THROWS_AS(Tableau({{2, 1}}), std::invalid_argument);       // row decrease
  CHECK_THROWS_AS(Tableau({{1, 1}, {1}}), std::invalid_argument);  // column repeat
  CHECK_THROWS_AS(Tableau({{1}, {2, 2}}), std::invalid_argument);  // shape not partition
  Tableau t({{1, 1, 2}, {2, 3}});
  CHECK(t.shape() == P({3, 2}));
  CHECK(t.content() == std::vector<int>{2, 2, 1});
  CHECK(t.size() == 5);
}

TEST_CASE("kostka") {
  // Unique row-filling of content lambda.
  for (int d = 1; d <= 6; ++d)
    for (const auto& lam : enumerate_partitions(d))
      CHECK(kostka(lam, lam.parts()) == 1);
  CHECK(kostka(P({2, 1}), {1, 1, 1}) == 2);
  CHECK(kostka(P({1, 1}), {2}) == 0);
  CHECK_THROWS_AS(kostka(P({2}), {1}), std::invalid_argument);
}

TEST_CASE("kostka at content (1^d) is f^lambda") {
  for (int d = 1; d <= 7; ++d) {
    std::vector<int> ones(static_cast<size_t>(d), 1);
    for (const auto& lam : enumerate_partitions(d))
      CHECK(kostka(lam, ones) == dim_sym_irrep(lam));
  }
}

TEST_CASE("kostka positivity is dominance") {
  for (int d = 1; d <= 6; ++d) {
    auto all = enumerate_partitions(d);
    for (const auto& lam : all) {
      for (const auto& mu : all) {
        bool positive = kostka(lam, mu.parts()) > 0;
        CHECK(positive == dominance_leq(mu, lam));
      }
    }
  }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(P({2, 1}), P({2, 1})));
  CHECK(dominance_leq(P({1, 1, 1}), P({3})));
  CHECK(dominance_leq(P({2, 2}), P({3, 1})));
  CHECK_FALSE(dominance_leq(P({3, 1}), P({2, 2})));
  CHECK_THROWS_AS(dominance_leq(P({2}), P({1})), std::invalid_argument);
}

TEST_CASE("sym_character spot values") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& rho : enumerate_partitions(d))
      CHECK(sym_character(P({d}), rho) == 1);
  CHECK(sym_character(P({2, 1}), P({1, 1, 1})) == 2);
  // Permutation module of S_3 on 3 points minus the trivial character:
  // a 3-cycle fixes no point, so the value is 0 - 1 = -1.
  CHECK(sym_character(P({2, 1}), P({3})) == -1);
  CHECK_THROWS_AS(sym_character(P({2}), P({1})), std::invalid_argument);
}

TEST_CASE("sign character and degree") {
  for (int d = 1; d <= 7; ++d) {
    std::vector<int> col(static_cast<size_t>(d), 1);
    Partition sign_label(col);
    std::vector<int> ones(static_cast<size_t>(d), 1);
    for (const auto& rho : enumerate_partitions(d)) {
      int sign = (d - rho.length()) % 2 == 0 ? 1 : -1;
      CHECK(sym_character(sign_label, rho) == sign);
    }
    for (const auto& lam : enumerate_partitions(d))
      CHECK(sym_character(lam, CycleType(ones)) == dim_sym_irrep(lam));
  }
}

TEST_CASE("character orthogonality for d <= 6") {
  for (int d = 1; d <= 6; ++d) {
    auto all = enumerate_partitions(d);
    for (const auto& lam : all) {
      for (const auto& mu : all) {
        Int total = 0;
        for (const auto& rho : all)
          total += conjugacy_class_size(rho) * sym_character(lam, rho) *
                   sym_character(mu, rho);
        CHECK(total == (lam == mu ? factorial(d) : Int(0)));
      }
    }
  }
}

TEST_CASE("class sizes sum to d!") {
  for (int d = 1; d <= 8; ++d) {
    Int total = 0;
    for (const auto& rho : enumerate_partitions(d))
      total += conjugacy_class_size(rho);
    CHECK(total == factorial(d));
  }
}

TEST_CASE("Howe dimension identity at desk scale") {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int d = 1; d <= 6; ++d) {
        Int rhs = 0;
        for (const auto& lam : enumerate_partitions(d, std::min(n, m)))
          rhs += dim_gl_irrep(n, lam) * dim_gl_irrep(m, lam);
        CHECK(binomial(static_cast<long>(n) * m + d - 1, d) == rhs);
      }
    }
  }
}

TEST_CASE("partition_from_content") {
  CHECK(partition_from_content({0, 2, 1, 0}) == P({2, 1}));
  CHECK(partition_from_content({}) == P({}));
  CHECK_THROWS_AS(partition_from_content({-1}), std::invalid_argument);
}
