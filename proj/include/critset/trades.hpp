#pragma once

// Trades, disjoint mates, cycles.  A trade is a non-empty partial matrix T
// with a mate T' filled on the same cells, differing on every one of them,
// and preserving per-line counts of both 0s and 1s (for mates these two
// conditions coincide; both are checked anyway).  A cycle is a trade with
// 0 or 2 filled cells per line: a single closed circuit whose entries
// alternate 1,0,1,0,...

#include <optional>
#include <vector>

#include "critset/matrix.hpp"

namespace critset {

struct Trade {
  PartialMatrix body;
  PartialMatrix mate;
};

bool valid_trade(const Trade& t);
Trade make_trade(PartialMatrix body, PartialMatrix mate);

// Trade supported on the cells where m1 and m2 differ (body from m1);
// nullopt iff m1 == m2.  Inputs must be complete with identical margins.
std::optional<Trade> trade_between(const PartialMatrix& m1, const PartialMatrix& m2);

struct Cycle {
  // Circuit order: starts at its lexicographically least cell, first hop
  // along that cell's row; length is even and >= 4.
  std::vector<Triple> circuit;

  std::vector<Triple> sorted() const;
  auto operator<=>(const Cycle&) const = default;
};

bool valid_cycle(const Cycle& c);
Trade cycle_trade(const Cycle& c, int rows, int cols, const Margins& margins);

// Cell-disjoint cycles whose union is the trade; deterministic (each cycle
// starts at the least remaining cell, continuations explored in index
// order, shortest first).
std::vector<Cycle> decompose_cycles(const Trade& t);

// Shortest cycle contained in m (as triples) whose intersection with d is
// exactly {cell}; nullopt if none exists.  Requires d subset of m and cell
// filled in d.
std::optional<Cycle> find_cycle_through(const PartialMatrix& m, const PartialMatrix& d,
                                        Cell cell);

// Replace the body of t inside m by its mate.
PartialMatrix apply_trade(const PartialMatrix& m, const Trade& t);
PartialMatrix apply_cycle(const PartialMatrix& m, const Cycle& c);

}  // namespace critset
