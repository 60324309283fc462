#pragma once

// Defining-set and critical-set verification, greedy minimization, and the
// complement constructions.

#include <map>
#include <optional>
#include <vector>

#include "critset/completion.hpp"
#include "critset/trades.hpp"
#include "critset/walks.hpp"

namespace critset {

// d is a defining set of m iff m is the unique completion of d.
bool is_defining(const PartialMatrix& m, const PartialMatrix& d,
                 const SearchOptions& opts = {});

// Defining and no proper subset is defining.  Single-cell removals
// suffice: defining sets are upward closed under inclusion (completions of
// a superset are a subset of the completions, and m completes both), so a
// set with no removable cell has no defining proper subset at all.
bool is_critical(const PartialMatrix& m, const PartialMatrix& d,
                 const SearchOptions& opts = {});

struct CertifiedCriticalSet {
  PartialMatrix matrix;
  PartialMatrix cells;
  std::optional<WalkCertificate> certificate;
  std::map<Cell, Cycle> per_cell_cycles;

  int size() const { return cells.size(); }
};

// Filled cells of d in row-major order (the default removal order).
std::vector<Cell> row_major_cells(const PartialMatrix& d);

// Greedily drop cells of removal_order whose removal keeps d defining.
// One pass is exact: a cell kept against a larger set stays unremovable
// against every subset (monotonicity of completion counts).  Cells outside
// removal_order are never dropped; with the full row-major order the
// result is a critical set.
CertifiedCriticalSet minimize_to_critical(const PartialMatrix& m, const PartialMatrix& d,
                                          const std::vector<Cell>& removal_order,
                                          const SearchOptions& opts = {});

// Certificate re-verification: cells lie in matrix, the walk certificate
// (when present) passes verify_block_conditions and induces exactly `cells`, and
// every stored cycle meets `cells` exactly at its own cell.
bool reverify(const CertifiedCriticalSet& c);

// Find and store a shortest cycle through every cell of c.cells (the
// per-cell witnesses of minimality); throws if some cell has none.
void attach_cell_cycles(CertifiedCriticalSet& c);

// True iff per_cell_cycles covers every cell of c.cells and re-verifies.
bool cycles_certify(const CertifiedCriticalSet& c);

// Defining set built from the complement walk of the certificate's block
// structure: Ones below W' plus Zeros above W'.  Disjoint from c.cells;
// on Lambda_{2m}^m its size is at most 4m^2 - 2m - |C|.
PartialMatrix complement_defining(const PartialMatrix& m, const CertifiedCriticalSet& c);

}  // namespace critset
