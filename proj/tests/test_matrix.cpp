#include "critset/matrix.hpp"

#include <random>

#include "doctest.h"
#include "critset/fixtures.hpp"

using namespace critset;

TEST_CASE("margins sanity") {
  CHECK(Margins::uniform(6, 3).consistent());
  CHECK_FALSE(Margins{{2, 2}, {1, 1}}.consistent());   // sums differ
  CHECK_FALSE(Margins{{3, 1}, {2, 2}}.consistent());   // r_1 > cols
}

TEST_CASE("validate: the four counting conditions") {
  Fixture fig1 = load_fixture("fig1");
  CHECK(validate(fig1.matrix));
  CHECK(is_complete(fig1.matrix));

  PartialMatrix empty = PartialMatrix::empty_uniform(4, 2);
  CHECK(validate(empty));
  CHECK_FALSE(is_complete(empty));

  PartialMatrix bad = PartialMatrix::empty_uniform(2, 1);
  bad.set(1, 1, Entry::One);
  bad.set(1, 2, Entry::One);  // two Ones in a row with r_1 = 1
  CHECK_FALSE(validate(bad));
}

TEST_CASE("subset_of") {
  Fixture fig1 = load_fixture("fig1");
  CHECK(subset_of(fig1.marked, fig1.matrix));
  CHECK(subset_of(fig1.matrix, fig1.matrix));

  PartialMatrix d = PartialMatrix::empty_uniform(6, 3);
  d.set(1, 1, Entry::Zero);  // fig1 has One at (1,1)
  CHECK_FALSE(subset_of(d, fig1.matrix));

  PartialMatrix other(4, 4, Margins::uniform(4, 2));
  CHECK_THROWS_AS((void)subset_of(other, fig1.matrix), std::invalid_argument);
}

TEST_CASE("permute basics") {
  Fixture fig1 = load_fixture("fig1");
  Perm id = identity_perm(6);
  CHECK(permute(fig1.matrix, id, id) == fig1.matrix);

  Perm swap12 = {2, 1, 3, 4, 5, 6};
  PartialMatrix once = permute(fig1.matrix, swap12, id);
  CHECK_FALSE(once == fig1.matrix);
  CHECK(permute(once, swap12, id) == fig1.matrix);
  CHECK(once.size() == fig1.matrix.size());
  CHECK(is_complete(once));

  Perm bad = {1, 1, 3, 4, 5, 6};
  CHECK_THROWS_AS((void)permute(fig1.matrix, bad, id), std::invalid_argument);
}

TEST_CASE("text round trip") {
  Fixture fig1 = load_fixture("fig1");
  std::string text = to_text(fig1.matrix);
  CHECK(parse_text(text) == fig1.matrix);
  CHECK(to_text(parse_text(text)) == text);

  PartialMatrix p = parse_text("R=1,1 S=1,1\n1.\n.0\n");
  CHECK(p.size() == 2);
  CHECK(p.at(1, 1) == Entry::One);
  CHECK(p.at(2, 2) == Entry::Zero);

  CHECK_THROWS_AS(parse_text("R=1,1 S=1,1\n1x\n..\n"), ParseError);
  CHECK_THROWS_AS(parse_text("R=1,1 S=1,1\n1..\n..\n"), ParseError);
  CHECK_THROWS_AS(parse_text("R=1,1 S=2,0,0\n10\n01\n"), ParseError);
}

TEST_CASE("parse/serialize round trip on random partial matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    Margins margins;
    margins.row_sums.resize(rows);
    margins.col_sums.assign(cols, 0);
    // random margins via a random complete grid
    std::vector<std::vector<int>> grid(rows, std::vector<int>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) grid[i][j] = rng() & 1;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        margins.row_sums[i] += grid[i][j];
        margins.col_sums[j] += grid[i][j];
      }
    PartialMatrix m(rows, cols, margins);
    for (int i = 1; i <= rows; ++i)
      for (int j = 1; j <= cols; ++j)
        if (rng() % 3)
          m.set(i, j, grid[i - 1][j - 1] ? Entry::One : Entry::Zero);
    CHECK(parse_text(to_text(m)) == m);
  }
}

TEST_CASE("complement and transpose") {
  Fixture fig1 = load_fixture("fig1");
  PartialMatrix c = complement(fig1.matrix);
  CHECK(is_complete(c));
  CHECK(c.margins().row_sums == Margins::uniform(6, 3).row_sums);
  CHECK(complement(c) == fig1.matrix);
  CHECK(transpose(transpose(fig1.matrix)) == fig1.matrix);
}

TEST_CASE("fixtures all load and verify structurally") {
  for (const auto& name : fixture_names()) {
    Fixture f = load_fixture(name);
    CHECK(validate(f.matrix));
    CHECK(is_complete(f.matrix));
    CHECK(validate(f.marked));
    CHECK(subset_of(f.marked, f.matrix));
  }
  CHECK(load_fixture("fig1").marked.size() == 14);
  CHECK(load_fixture("filly-left").marked.size() == 15);
  CHECK(load_fixture("filly-right").marked.size() == 26);
  CHECK(load_fixture("ookii").marked.size() == 34);
  CHECK(load_fixture("tryagain").marked.size() == 20);
  CHECK(load_fixture("fig3").marked.size() == 57);
  CHECK(load_fixture("fig4").marked.size() == 56);
  CHECK(load_fixture("suprri").marked.size() == 28);
}

TEST_CASE("subset_of is a partial order on fixed-margin partial matrices") {
  std::mt19937 rng(1234);
  Fixture fig1 = load_fixture("fig1");
  auto random_subset = [&](const PartialMatrix& m) {
    PartialMatrix d(m.rows(), m.cols(), m.margins());
    for (int i = 1; i <= m.rows(); ++i)
      for (int j = 1; j <= m.cols(); ++j)
        if (rng() % 2) d.set(i, j, m.at(i, j));
    return d;
  };
  for (int trial = 0; trial < 50; ++trial) {
    PartialMatrix a = random_subset(fig1.matrix);
    PartialMatrix b = random_subset(a);   // b subset of a by construction
    PartialMatrix c = random_subset(b);
    CHECK(subset_of(a, a));                         // reflexive
    CHECK(subset_of(b, a));
    CHECK(subset_of(c, a));                         // transitive
    if (subset_of(a, b)) CHECK(a == b);             // antisymmetric
  }
}

TEST_CASE("permuting a uniform-class matrix leaves its margins unchanged") {
  PartialMatrix x4 = parse_text("R=2,2,2,2 S=2,2,2,2\n1010\n0101\n1010\n0101\n");
  Perm cycle = {2, 3, 4, 1};  // row cycle (1 2 3 4)
  PartialMatrix rotated = permute(x4, cycle, identity_perm(4));
  CHECK(rotated.margins() == x4.margins());
  CHECK(rotated.size() == x4.size());
  CHECK(is_complete(rotated));
}
