#pragma once

// Backtracking enumeration of completions of a partial matrix to members
// of A(R,S).  Cells are filled in row-major order, Zero branch before One,
// so single-threaded enumeration order is deterministic.  Parallel runs
// return identical counts, and identical sequences whenever the limit does
// not truncate the enumeration.

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "critset/matrix.hpp"

namespace critset {

struct CompletionBudget {
  long long limit = std::numeric_limits<long long>::max();
  long long node_cap = 0;  // 0 = unlimited

  static CompletionBudget up_to(long long k) { return CompletionBudget{k, 0}; }
};

// Capacity = the four A'(R,S) conditions as running bounds.
// Full = Capacity plus a Gale-Ryser feasibility test on the residual
// margin problem at row boundaries.
// None = assign freely and filter complete grids at the leaves (oracle
// mode for small grids only).
enum class PruneLevel { None, Capacity, Full };

struct SearchOptions {
  PruneLevel prune = PruneLevel::Full;
  bool propagate = true;  // forced-cell propagation (never changes results)
  int threads = 1;

  static SearchOptions with_threads(int t) {
    SearchOptions o;
    o.threads = t;
    return o;
  }
};

// Raised when node_cap is hit before the search resolves; a count is
// never silently wrong.
struct BudgetExhausted : std::runtime_error {
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// min(limit, number of completions of d in A(R,S)); 0 means no completion.
long long count_completions(const PartialMatrix& d, const CompletionBudget& budget = {},
                            const SearchOptions& opts = {});

// Yields each completion once; return false from the callback to stop.
// Order is row-major / Zero-first in single-threaded mode.
void for_each_completion(const PartialMatrix& d, const CompletionBudget& budget,
                         const std::function<bool(const PartialMatrix&)>& yield,
                         const SearchOptions& opts = {});

std::vector<PartialMatrix> enumerate_completions(const PartialMatrix& d,
                                                 const CompletionBudget& budget = {},
                                                 const SearchOptions& opts = {});

enum class UniqueStatus { Unique, None, Ambiguous };

struct UniqueCompletion {
  UniqueStatus status = UniqueStatus::None;
  std::optional<PartialMatrix> matrix;
};

UniqueCompletion complete_unique(const PartialMatrix& d, const SearchOptions& opts = {});

// Existence of a (0,1)-matrix with the given exact line sums.
bool gale_ryser_feasible(std::vector<int> row_demands, const std::vector<int>& col_demands);

}  // namespace critset
