#include "critset/completion.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace critset {

bool gale_ryser_feasible(std::vector<int> row_demands, const std::vector<int>& col_demands) {
  long long total_r = 0, total_c = 0;
  for (int d : row_demands) {
    if (d < 0) return false;
    total_r += d;
  }
  for (int s : col_demands) {
    if (s < 0) return false;
    total_c += s;
  }
  if (total_r != total_c) return false;
  std::sort(row_demands.begin(), row_demands.end(), std::greater<int>());
  long long lhs = 0;
  for (size_t k = 1; k <= row_demands.size(); ++k) {
    lhs += row_demands[k - 1];
    long long rhs = 0;
    for (int s : col_demands) rhs += std::min<long long>(s, k);
    if (lhs > rhs) return false;
  }
  return true;
}

namespace {

constexpr std::int8_t kEmpty = 2;

// One backtracking search over the empty cells of a fixed partial matrix.
struct Engine {
  int rows = 0, cols = 0;
  std::vector<int> row_target, col_target;
  std::vector<std::int8_t> grid;  // row-major 0-based
  std::vector<int> row_ones, row_zeros, col_ones, col_zeros;
  std::vector<int> empties;  // linear indices, row-major

  PruneLevel prune = PruneLevel::Full;
  bool propagate = true;
  long long limit = std::numeric_limits<long long>::max();
  long long node_cap = 0;
  long long nodes = 0;
  long long found = 0;
  bool out_of_budget = false;
  bool stopped = false;
  std::atomic<long long>* shared_found = nullptr;  // parallel saturation
  std::atomic<long long>* shared_nodes = nullptr;

  const Margins* margins = nullptr;
  std::function<bool(const PartialMatrix&)> yield;

  void init(const PartialMatrix& d) {
    rows = d.rows();
    cols = d.cols();
    margins = &d.margins();
    row_target = d.margins().row_sums;
    col_target = d.margins().col_sums;
    grid.assign(static_cast<size_t>(rows) * cols, kEmpty);
    row_ones.assign(rows, 0);
    row_zeros.assign(rows, 0);
    col_ones.assign(cols, 0);
    col_zeros.assign(cols, 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        Entry e = d.at(i + 1, j + 1);
        if (e == Entry::Empty) {
          empties.push_back(i * cols + j);
        } else {
          int v = e == Entry::One ? 1 : 0;
          grid[i * cols + j] = static_cast<std::int8_t>(v);
          (v ? row_ones[i] : row_zeros[i])++;
          (v ? col_ones[j] : col_zeros[j])++;
        }
      }
  }

  bool can_place(int idx, int v) const {
    int i = idx / cols, j = idx % cols;
    if (v) {
      return row_ones[i] < row_target[i] && col_ones[j] < col_target[j];
    }
    return row_zeros[i] < cols - row_target[i] && col_zeros[j] < rows - col_target[j];
  }

  void place(int idx, int v) {
    int i = idx / cols, j = idx % cols;
    grid[idx] = static_cast<std::int8_t>(v);
    (v ? row_ones[i] : row_zeros[i])++;
    (v ? col_ones[j] : col_zeros[j])++;
  }

  void unplace(int idx) {
    int i = idx / cols, j = idx % cols;
    int v = grid[idx];
    grid[idx] = kEmpty;
    (v ? row_ones[i] : row_zeros[i])--;
    (v ? col_ones[j] : col_zeros[j])--;
  }

  // Fill every cell forced by an exhausted line capacity; false on
  // contradiction.  Trail records placements for undo.
  bool propagate_forced(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < rows; ++i) {
        int need1 = row_target[i] - row_ones[i];
        int need0 = (cols - row_target[i]) - row_zeros[i];
        if (need1 == 0 && need0 == 0) continue;
        int forced = need1 == 0 ? 0 : (need0 == 0 ? 1 : -1);
        if (forced < 0) continue;
        for (int j = 0; j < cols; ++j) {
          int idx = i * cols + j;
          if (grid[idx] != kEmpty) continue;
          if (!can_place(idx, forced)) return false;
          place(idx, forced);
          trail.push_back(idx);
          changed = true;
        }
      }
      for (int j = 0; j < cols; ++j) {
        int need1 = col_target[j] - col_ones[j];
        int need0 = (rows - col_target[j]) - col_zeros[j];
        if (need1 == 0 && need0 == 0) continue;
        int forced = need1 == 0 ? 0 : (need0 == 0 ? 1 : -1);
        if (forced < 0) continue;
        for (int i = 0; i < rows; ++i) {
          int idx = i * cols + j;
          if (grid[idx] != kEmpty) continue;
          if (!can_place(idx, forced)) return false;
          place(idx, forced);
          trail.push_back(idx);
          changed = true;
        }
      }
    }
    return true;
  }

  void undo(const std::vector<int>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) unplace(*it);
  }

  bool residual_feasible() const {
    std::vector<int> demands;
    demands.reserve(rows);
    for (int i = 0; i < rows; ++i) {
      int need1 = row_target[i] - row_ones[i];
      if (need1 > 0 || row_ones[i] + row_zeros[i] < cols) demands.push_back(need1);
    }
    std::vector<int> supplies(cols);
    for (int j = 0; j < cols; ++j) supplies[j] = col_target[j] - col_ones[j];
    return gale_ryser_feasible(std::move(demands), supplies);
  }

  bool margins_exact() const {
    for (int i = 0; i < rows; ++i)
      if (row_ones[i] != row_target[i]) return false;
    for (int j = 0; j < cols; ++j)
      if (col_ones[j] != col_target[j]) return false;
    return true;
  }

  PartialMatrix snapshot() const {
    PartialMatrix m(rows, cols, *margins);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        std::int8_t v = grid[i * cols + j];
        if (v != kEmpty) m.set(i + 1, j + 1, v ? Entry::One : Entry::Zero);
      }
    return m;
  }

  long long found_so_far() const {
    return shared_found ? shared_found->load(std::memory_order_relaxed) : found;
  }

  void emit() {
    if (prune == PruneLevel::None && !margins_exact()) return;
    ++found;
    if (shared_found) shared_found->fetch_add(1, std::memory_order_relaxed);
    if (yield && !yield(snapshot())) stopped = true;
    if (found_so_far() >= limit) stopped = true;
  }

  void dfs(size_t pos) {
    if (stopped || out_of_budget) return;
    ++nodes;
    if (shared_nodes) shared_nodes->fetch_add(1, std::memory_order_relaxed);
    if (node_cap > 0) {
      long long n = shared_nodes ? shared_nodes->load(std::memory_order_relaxed) : nodes;
      if (n > node_cap) {
        out_of_budget = true;
        return;
      }
    }

    std::vector<int> trail;
    if (propagate && prune != PruneLevel::None && !propagate_forced(trail)) {
      undo(trail);
      return;
    }

    while (pos < empties.size() && grid[empties[pos]] != kEmpty) ++pos;

    if (pos == empties.size()) {
      emit();
      undo(trail);
      return;
    }

    int idx = empties[pos];
    bool row_boundary = pos == 0 || empties[pos - 1] / cols != idx / cols;
    if (prune == PruneLevel::Full && row_boundary && !residual_feasible()) {
      undo(trail);
      return;
    }

    for (int v = 0; v <= 1; ++v) {
      if (prune != PruneLevel::None && !can_place(idx, v)) continue;
      place(idx, v);
      dfs(pos + 1);
      unplace(idx);
      if (stopped || out_of_budget) break;
    }
    undo(trail);
  }
};

// Breadth-first expansion of the top of the tree into independent
// subproblems (assignment prefixes in lexicographic order).
std::vector<std::vector<std::pair<int, int>>> split_frontier(Engine& eng, size_t want) {
  std::vector<std::vector<std::pair<int, int>>> frontier{{}};
  size_t depth = 0;
  while (frontier.size() < want && depth < eng.empties.size()) {
    int idx = eng.empties[depth];
    std::vector<std::vector<std::pair<int, int>>> next;
    for (const auto& prefix : frontier) {
      for (auto& [cell, value] : prefix) eng.place(cell, value);
      for (int v = 0; v <= 1; ++v) {
        if (!eng.can_place(idx, v)) continue;
        auto extended = prefix;
        extended.emplace_back(idx, v);
        next.push_back(std::move(extended));
      }
      for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) eng.unplace(it->first);
    }
    frontier = std::move(next);
    ++depth;
    if (frontier.empty()) break;
  }
  return frontier;
}

struct RunResult {
  long long found = 0;
  bool out_of_budget = false;
  std::vector<PartialMatrix> collected;
};

RunResult run_search(const PartialMatrix& d, const CompletionBudget& budget,
                     const SearchOptions& opts, bool collect,
                     const std::function<bool(const PartialMatrix&)>& yield) {
  if (!validate(d)) throw std::invalid_argument("search: input violates A'(R,S) conditions");
  if (budget.limit < 1) throw std::invalid_argument("search: limit must be >= 1");

  Engine base;
  base.init(d);
  if (opts.prune == PruneLevel::None && base.empties.size() > 28)
    throw GuardError("prune level None is a brute-force oracle; too many empty cells");

  base.prune = opts.prune;
  base.propagate = opts.propagate && opts.prune != PruneLevel::None;
  base.limit = budget.limit;
  base.node_cap = budget.node_cap;

  RunResult result;

#ifdef _OPENMP
  if (opts.threads > 1 && base.empties.size() > 8) {
    auto frontier = split_frontier(base, static_cast<size_t>(opts.threads) * 16);
    std::atomic<long long> shared_found{0};
    std::atomic<long long> shared_nodes{0};
    std::vector<RunResult> partial(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.threads)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(frontier.size()); ++t) {
      Engine eng = base;
      eng.shared_found = &shared_found;
      eng.shared_nodes = &shared_nodes;
      eng.found = 0;
      if (collect || yield)
        eng.yield = [&partial, t, collect, &yield](const PartialMatrix& m) {
          partial[t].collected.push_back(m);
          return true;
        };
      bool ok = true;
      for (auto& [cell, value] : frontier[t]) {
        if (!eng.can_place(cell, value)) {
          ok = false;
          break;
        }
        eng.place(cell, value);
      }
      if (ok) eng.dfs(0);
      partial[t].found = eng.found;
      partial[t].out_of_budget = eng.out_of_budget;
    }
    for (auto& p : partial) {
      result.out_of_budget |= p.out_of_budget;
      result.found += p.found;
      if (collect || yield)
        for (auto& m : p.collected) {
          if (static_cast<long long>(result.collected.size()) >= budget.limit) break;
          result.collected.push_back(std::move(m));
        }
    }
    result.found = std::min(result.found, budget.limit);
    if (result.out_of_budget && result.found < budget.limit)
      throw BudgetExhausted("completion search exceeded its node cap");
    if (yield)
      for (const auto& m : result.collected)
        if (!yield(m)) break;
    return result;
  }
#endif

  if (collect)
    base.yield = [&result](const PartialMatrix& m) {
      result.collected.push_back(m);
      return true;
    };
  else
    base.yield = yield;
  base.dfs(0);
  result.found = std::min(base.found, budget.limit);
  result.out_of_budget = base.out_of_budget;
  if (result.out_of_budget && result.found < budget.limit)
    throw BudgetExhausted("completion search exceeded its node cap");
  return result;
}

}  // namespace

long long count_completions(const PartialMatrix& d, const CompletionBudget& budget,
                            const SearchOptions& opts) {
  return run_search(d, budget, opts, false, nullptr).found;
}

void for_each_completion(const PartialMatrix& d, const CompletionBudget& budget,
                         const std::function<bool(const PartialMatrix&)>& yield,
                         const SearchOptions& opts) {
  run_search(d, budget, opts, false, yield);
}

std::vector<PartialMatrix> enumerate_completions(const PartialMatrix& d,
                                                 const CompletionBudget& budget,
                                                 const SearchOptions& opts) {
  return std::move(run_search(d, budget, opts, true, nullptr).collected);
}

UniqueCompletion complete_unique(const PartialMatrix& d, const SearchOptions& opts) {
  auto two = enumerate_completions(d, CompletionBudget::up_to(2), opts);
  UniqueCompletion out;
  if (two.empty()) {
    out.status = UniqueStatus::None;
  } else if (two.size() == 1) {
    out.status = UniqueStatus::Unique;
    out.matrix = std::move(two.front());
  } else {
    out.status = UniqueStatus::Ambiguous;
  }
  return out;
}

}  // namespace critset
