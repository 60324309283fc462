#include "critset/defsets.hpp"

#include <random>

#include "doctest.h"
#include "critset/constructions.hpp"
#include "critset/extremal.hpp"
#include "critset/fixtures.hpp"

using namespace critset;

TEST_CASE("figure 1 set is defining and critical") {
  Fixture fig1 = load_fixture("fig1");
  CHECK(is_defining(fig1.matrix, fig1.marked));
  CHECK(is_critical(fig1.matrix, fig1.marked));
  CHECK(is_defining(fig1.matrix, fig1.matrix));       // D = M
  PartialMatrix nothing(6, 6, fig1.matrix.margins());
  CHECK_FALSE(is_defining(fig1.matrix, nothing));
}

TEST_CASE("removing any cell of a critical set breaks it") {
  Fixture filly = load_fixture("filly-left");
  REQUIRE(is_critical(filly.matrix, filly.marked));
  for (const Triple& t : filly.marked.triples()) {
    PartialMatrix smaller = filly.marked;
    smaller.set(t.row, t.col, Entry::Empty);
    CHECK_FALSE(is_defining(filly.matrix, smaller));
  }
}

TEST_CASE("a full matrix in a rich class is not critical") {
  PartialMatrix m = random_member(ClassSpec::uniform(4, 2), 99);
  CHECK(is_defining(m, m));
  CHECK_FALSE(is_critical(m, m));
}

TEST_CASE("upward closure of defining sets") {
  std::mt19937_64 seeds(61);
  std::mt19937 rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    PartialMatrix m = random_member(ClassSpec::uniform(4, 2), seeds());
    PartialMatrix d(4, 4, m.margins());
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        if (rng() % 2) d.set(i, j, m.at(i, j));
    if (!is_defining(m, d)) continue;
    PartialMatrix bigger = d;
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        if (!bigger.filled(i, j) && rng() % 2) bigger.set(i, j, m.at(i, j));
    CHECK(is_defining(m, bigger));
  }
}

TEST_CASE("minimize_to_critical from the full figure-1 matrix") {
  Fixture fig1 = load_fixture("fig1");
  auto c = minimize_to_critical(fig1.matrix, fig1.matrix, row_major_cells(fig1.matrix));
  CHECK(is_critical(fig1.matrix, c.cells));
  CHECK(subset_of(c.cells, fig1.matrix));
  // scs(Lambda_6^3 member) >= 9 and the greedy result is at most |M|
  CHECK(c.cells.size() >= 9);
  CHECK(c.cells.size() <= 17);
}

TEST_CASE("minimizing an already-critical set returns it unchanged") {
  Fixture fig1 = load_fixture("fig1");
  auto c = minimize_to_critical(fig1.matrix, fig1.marked, row_major_cells(fig1.marked));
  CHECK(c.cells == fig1.marked);
}

TEST_CASE("all Zeros of X_4 minimize to a critical subset") {
  PartialMatrix x = build_x(2);
  PartialMatrix zeros(4, 4, x.margins());
  for (const Triple& t : x.triples())
    if (t.value == 0) zeros.set(t.row, t.col, Entry::Zero);
  REQUIRE(is_defining(x, zeros));
  auto c = minimize_to_critical(x, zeros, row_major_cells(zeros));
  CHECK(is_critical(x, c.cells));
  CHECK(c.cells.size() >= 4);
  CHECK_THROWS_AS((void)minimize_to_critical(x, PartialMatrix(4, 4, x.margins()), {}),
                  std::invalid_argument);
}

TEST_CASE("certificates reverify and cycles attach on figure 1") {
  Fixture fig1 = load_fixture("fig1");
  auto cert = search_walk_certificate(fig1.matrix, fig1.marked);
  REQUIRE(cert.has_value());
  CertifiedCriticalSet c{fig1.matrix, fig1.marked, *cert, {}};
  CHECK(reverify(c));
  attach_cell_cycles(c);
  CHECK(c.per_cell_cycles.size() == 14);
  CHECK(cycles_certify(c));

  CertifiedCriticalSet broken = c;
  broken.cells.set(1, 1, Entry::One);  // no longer the induced set
  CHECK_FALSE(reverify(broken));
}

TEST_CASE("complement of a critical set is defining (m = 2 exhaustive)") {
  auto members = enumerate_class(ClassSpec::uniform(4, 2));
  REQUIRE(members.size() == 90);
  std::mt19937 rng(71);
  for (int trial = 0; trial < 12; ++trial) {
    const PartialMatrix& m = members[rng() % members.size()];
    auto c = minimize_to_critical(m, m, row_major_cells(m));
    REQUIRE(is_critical(m, c.cells));
    CHECK(is_defining(m, difference(m, c.cells)));
  }
}

TEST_CASE("complement_defining from the figure-1 walk certificate") {
  Fixture fig1 = load_fixture("fig1");
  Perm id = identity_perm(6);
  std::vector<std::pair<int, int>> pts = {{0, 0}, {1, 0},  {1, -1}, {2, -1}, {2, -2},
                                          {3, -2}, {3, -3}, {4, -3}, {4, -4}, {5, -4},
                                          {5, -5}, {5, -6}, {6, -6}};
  WalkCertificate cert{id, id, Walk::from_points(6, 6, pts)};
  CertifiedCriticalSet c{fig1.matrix, fig1.marked, cert, {}};
  PartialMatrix d = complement_defining(fig1.matrix, c);
  // disjoint, defining, and within the size bound 4m^2-2m-|C| = 36-6-14
  for (const Triple& t : d.triples()) CHECK_FALSE(c.cells.filled(t.row, t.col));
  CHECK(is_defining(fig1.matrix, d));
  CHECK(d.size() <= 16);
}

TEST_CASE("complement_defining across the X family") {
  for (int m = 2; m <= 4; ++m) {
    auto c = critical_x(m);
    PartialMatrix d = complement_defining(c.matrix, c);
    for (const Triple& t : d.triples()) CHECK_FALSE(c.cells.filled(t.row, t.col));
    CHECK(is_defining(c.matrix, d));
    CHECK(d.size() <= 4 * m * m - 2 * m - c.cells.size());
  }
}

TEST_CASE("complement_defining on the size-28 set of B_8") {
  CompositionPair unit{std::vector<int>(8, 1), std::vector<int>(8, 1)};
  auto c = realize_b_composition(4, unit);
  REQUIRE(c.cells.size() == 28);
  PartialMatrix d = complement_defining(c.matrix, c);
  for (const Triple& t : d.triples()) CHECK_FALSE(c.cells.filled(t.row, t.col));
  CHECK(is_defining(c.matrix, d));
  CHECK(d.size() <= 4 * 16 - 8 - 28);
}
