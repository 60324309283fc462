#include "critset/completion.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "critset/fixtures.hpp"
#include "oracles.hpp"

using namespace critset;

TEST_CASE("two permutation matrices of order 2") {
  PartialMatrix empty = PartialMatrix::empty_uniform(2, 1);
  CHECK(count_completions(empty, CompletionBudget::up_to(10)) == 2);

  auto all = enumerate_completions(empty);
  REQUIRE(all.size() == 2);
  std::set<std::string> got{to_text(all[0]), to_text(all[1])};
  std::set<std::string> expect{"R=1,1 S=1,1\n10\n01\n", "R=1,1 S=1,1\n01\n10\n"};
  CHECK(got == expect);
}

TEST_CASE("|Lambda_4^2| = 90 against the brute-force oracle") {
  PartialMatrix empty = PartialMatrix::empty_uniform(4, 2);
  long long n = count_completions(empty, CompletionBudget::up_to(1000000));
  CHECK(n == 90);
  auto oracle_members = oracle::brute_force_class(Margins::uniform(4, 2));
  CHECK(static_cast<long long>(oracle_members.size()) == n);

  auto mine = enumerate_completions(empty);
  std::set<std::string> a, b;
  for (const auto& m : mine) a.insert(to_text(m));
  for (const auto& m : oracle_members) b.insert(to_text(m));
  CHECK(a == b);
}

TEST_CASE("DP oracle agrees on assorted partial inputs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 3);  // 3..5
    int x = 1 + static_cast<int>(rng() % (n - 1));
    PartialMatrix d = PartialMatrix::empty_uniform(n, x);
    // sprinkle a consistent prefix of some member
    auto members = enumerate_completions(d, CompletionBudget::up_to(50));
    REQUIRE(!members.empty());
    const PartialMatrix& pick = members[rng() % members.size()];
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (rng() % 3 == 0) d.set(i, j, pick.at(i, j));
    CHECK(count_completions(d) == oracle::dp_count_completions(d));
  }
}

TEST_CASE("figure 1 critical set completes uniquely") {
  Fixture fig1 = load_fixture("fig1");
  CHECK(count_completions(fig1.marked, CompletionBudget::up_to(2)) == 1);
  auto unique = complete_unique(fig1.marked);
  REQUIRE(unique.status == UniqueStatus::Unique);
  CHECK(*unique.matrix == fig1.matrix);
}

TEST_CASE("complete matrix completes to itself") {
  Fixture fig1 = load_fixture("fig1");
  auto unique = complete_unique(fig1.matrix);
  REQUIRE(unique.status == UniqueStatus::Unique);
  CHECK(*unique.matrix == fig1.matrix);
}

TEST_CASE("ambiguous completion") {
  PartialMatrix empty = PartialMatrix::empty_uniform(2, 1);
  CHECK(complete_unique(empty).status == UniqueStatus::Ambiguous);
}

TEST_CASE("no completion is a valid outcome") {
  // rows 1 and 2 both forced to place their One in column 3
  PartialMatrix stuck = PartialMatrix::empty_uniform(3, 1);
  stuck.set(1, 1, Entry::Zero);
  stuck.set(1, 2, Entry::Zero);
  stuck.set(2, 1, Entry::Zero);
  stuck.set(2, 2, Entry::Zero);
  REQUIRE(validate(stuck));
  CHECK(count_completions(stuck) == 0);
  CHECK(oracle::dp_count_completions(stuck) == 0);
  CHECK(complete_unique(stuck).status == UniqueStatus::None);
}

TEST_CASE("count saturates at the limit") {
  PartialMatrix empty = PartialMatrix::empty_uniform(4, 2);
  CHECK(count_completions(empty, CompletionBudget::up_to(7)) == 7);
  CHECK(count_completions(empty, CompletionBudget::up_to(90)) == 90);
  CHECK(count_completions(empty, CompletionBudget::up_to(91)) == 90);
}

TEST_CASE("node cap raises instead of returning a wrong count") {
  PartialMatrix empty = PartialMatrix::empty_uniform(6, 3);
  CompletionBudget tiny{1000000, 10};
  CHECK_THROWS_AS((void)count_completions(empty, tiny), BudgetExhausted);
}

TEST_CASE("|Lambda_6^3| = 297200 by enumeration and DP") {
  PartialMatrix empty = PartialMatrix::empty_uniform(6, 3);
  CHECK(count_completions(empty) == 297200);
  CHECK(oracle::dp_count_completions(empty) == 297200);
}

TEST_CASE("prune levels agree") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4;
    PartialMatrix d = PartialMatrix::empty_uniform(n, 2);
    auto members = enumerate_completions(d, CompletionBudget::up_to(90));
    const PartialMatrix& pick = members[rng() % members.size()];
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (rng() % 2) d.set(i, j, pick.at(i, j));

    SearchOptions none, capacity, full;
    none.prune = PruneLevel::None;
    none.propagate = false;
    capacity.prune = PruneLevel::Capacity;
    full.prune = PruneLevel::Full;
    long long with_none = count_completions(d, {}, none);
    CHECK(with_none == count_completions(d, {}, capacity));
    CHECK(with_none == count_completions(d, {}, full));
  }
}

TEST_CASE("propagation toggle never changes the count") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    PartialMatrix d = PartialMatrix::empty_uniform(6, 3);
    auto members = enumerate_completions(d, CompletionBudget::up_to(40));
    const PartialMatrix& pick = members[rng() % members.size()];
    for (int i = 1; i <= 6; ++i)
      for (int j = 1; j <= 6; ++j)
        if (rng() % 2) d.set(i, j, pick.at(i, j));
    SearchOptions with, without;
    with.propagate = true;
    without.propagate = false;
    CHECK(count_completions(d, {}, with) == count_completions(d, {}, without));
  }
}

TEST_CASE("monotonicity: adding cells cannot raise the count") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    PartialMatrix d = PartialMatrix::empty_uniform(4, 2);
    auto members = enumerate_completions(d, CompletionBudget::up_to(90));
    const PartialMatrix& pick = members[rng() % members.size()];
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        if (rng() % 4 == 0) d.set(i, j, pick.at(i, j));
    PartialMatrix bigger = d;
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        if (!bigger.filled(i, j) && rng() % 3 == 0) bigger.set(i, j, pick.at(i, j));
    CHECK(count_completions(bigger) <= count_completions(d));
  }
}

TEST_CASE("gale-ryser") {
  CHECK(gale_ryser_feasible({2, 2, 2, 2}, {2, 2, 2, 2}));
  CHECK(gale_ryser_feasible({3, 3, 3}, {3, 3, 3}));           // all-ones 3x3
  CHECK(gale_ryser_feasible({3, 3, 3}, {3, 3, 2, 1}));
  CHECK(gale_ryser_feasible({4, 4}, {2, 2, 2, 2}));
  CHECK_FALSE(gale_ryser_feasible({3, 3}, {3, 3}));           // a row exceeds two columns
  CHECK_FALSE(gale_ryser_feasible({4}, {2, 2}));
  CHECK_FALSE(gale_ryser_feasible({2, 2}, {2, 1}));           // totals differ
  CHECK_FALSE(gale_ryser_feasible({2, -1}, {1}));
}

TEST_CASE("invalid inputs are rejected up front") {
  PartialMatrix bad = PartialMatrix::empty_uniform(2, 1);
  bad.set(1, 1, Entry::One);
  bad.set(1, 2, Entry::One);
  REQUIRE_FALSE(validate(bad));
  CHECK_THROWS_AS((void)count_completions(bad), std::invalid_argument);
  CHECK_THROWS_AS((void)count_completions(PartialMatrix::empty_uniform(2, 1),
                                          CompletionBudget{0, 0}),
                  std::invalid_argument);
}

TEST_CASE("enumeration order is row-major with the Zero branch first") {
  PartialMatrix empty = PartialMatrix::empty_uniform(4, 2);
  auto all = enumerate_completions(empty, CompletionBudget::up_to(3));
  REQUIRE(all.size() == 3);
  // completions appear in lexicographic grid order under 0 < 1
  CHECK(to_text(all[0]) == "R=2,2,2,2 S=2,2,2,2\n0011\n0011\n1100\n1100\n");
  CHECK(to_text(all[0]) < to_text(all[1]));
  CHECK(to_text(all[1]) < to_text(all[2]));
}
