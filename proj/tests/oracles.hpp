#pragma once

// Independent oracles used only by tests: brute-force class enumeration,
// dynamic-programming class counts, subset-based defining/critical tables,
// and exhaustive cycle enumeration.  These deliberately avoid the library
// search paths they are checking.

#include <cstdint>
#include <map>
#include <vector>

#include "critset/completion.hpp"
#include "critset/matrix.hpp"

namespace oracle {

using critset::Cell;
using critset::Entry;
using critset::Margins;
using critset::PartialMatrix;
using critset::Triple;

// Every matrix of the class by filtering all 2^(rows*cols) grids.
inline std::vector<PartialMatrix> brute_force_class(const Margins& margins) {
  const int rows = static_cast<int>(margins.row_sums.size());
  const int cols = static_cast<int>(margins.col_sums.size());
  const int cells = rows * cols;
  if (cells > 20) throw std::runtime_error("brute_force_class: too large");
  std::vector<PartialMatrix> out;
  for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
    PartialMatrix m(rows, cols, margins);
    for (int c = 0; c < cells; ++c)
      m.set(c / cols + 1, c % cols + 1, (mask >> c) & 1 ? Entry::One : Entry::Zero);
    if (is_complete(m)) out.push_back(std::move(m));
  }
  return out;
}

// Number of completions of d, counted by dynamic programming over the
// residual column demands row by row (no backtracking).
inline long long dp_count_completions(const PartialMatrix& d) {
  const int rows = d.rows(), cols = d.cols();
  // residual one-demand per column after accounting for prescribed cells
  std::vector<int> col_need(cols);
  for (int j = 1; j <= cols; ++j) col_need[j - 1] = d.margins().col_sums[j - 1];
  for (const Triple& t : d.triples())
    if (t.value == 1) col_need[t.col - 1]--;
  for (int v : col_need)
    if (v < 0) return 0;

  // state: per-column residual demand vector; prescribed cells restrict
  // the choice sets per row
  std::map<std::vector<int>, long long> states;
  states[col_need] = 1;
  for (int i = 1; i <= rows; ++i) {
    int need = d.margins().row_sums[i - 1];
    std::vector<int> free_cols, forced_one;
    for (int j = 1; j <= cols; ++j) {
      Entry e = d.at(i, j);
      if (e == Entry::Empty)
        free_cols.push_back(j - 1);
      else if (e == Entry::One)
        need--;
    }
    if (need < 0 || need > static_cast<int>(free_cols.size())) return 0;

    std::map<std::vector<int>, long long> next;
    const int f = static_cast<int>(free_cols.size());
    for (const auto& [cols_state, ways] : states) {
      // choose which free cells of this row take a One
      std::vector<int> pick(f, 0);
      auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (remaining > f - pos) return;
        if (pos == f) {
          std::vector<int> ns = cols_state;
          for (int q = 0; q < f; ++q)
            if (pick[q]) {
              if (ns[free_cols[q]] == 0) return;
              ns[free_cols[q]]--;
            }
          // rows below must still be able to drain every column
          next[ns] += ways;
          return;
        }
        if (remaining > 0 && cols_state[free_cols[pos]] > 0) {
          pick[pos] = 1;
          self(self, pos + 1, remaining - 1);
          pick[pos] = 0;
        }
        self(self, pos + 1, remaining);
      };
      rec(rec, 0, need);
    }
    states = std::move(next);
    if (states.empty()) return 0;
  }
  long long total = 0;
  for (const auto& [state, ways] : states) {
    bool drained = true;
    for (int v : state) drained &= v == 0;
    if (drained) total += ways;
  }
  return total;
}

// All simple alternating cycles contained in a complete matrix, each once
// (canonical: least cell first, first hop along its row).
inline std::vector<std::vector<Triple>> all_cycles(const PartialMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Triple>> out;
  std::vector<char> used_row(rows + 1), used_col(cols + 1);
  std::vector<Triple> path;
  int r0 = 0, c0 = 0;
  auto value = [&](int r, int c) { return m.at(r, c) == Entry::One ? 1 : 0; };
  auto least_ok = [&](int r, int c) { return r > r0 || (r == r0 && c >= c0); };

  auto row_hop = [&](auto&& self, auto&& col_hop_fn, const Triple& cur) -> void {
    for (int c = 1; c <= cols; ++c) {
      if (c == cur.col || used_col[c]) continue;
      if (value(cur.row, c) != 1 - cur.value) continue;
      if (!least_ok(cur.row, c)) continue;
      Triple nxt{cur.row, c, 1 - cur.value};
      if (c == c0) {
        if (path.size() >= 3) {
          auto cycle = path;
          cycle.push_back(nxt);
          out.push_back(std::move(cycle));
        }
        continue;
      }
      used_col[c] = 1;
      path.push_back(nxt);
      col_hop_fn(self, col_hop_fn, nxt);
      path.pop_back();
      used_col[c] = 0;
    }
  };
  auto col_hop = [&](auto&& row_hop_fn, auto&& self, const Triple& cur) -> void {
    for (int r = 1; r <= rows; ++r) {
      if (r == cur.row || used_row[r]) continue;
      if (value(r, cur.col) != 1 - cur.value) continue;
      if (!least_ok(r, cur.col)) continue;
      Triple nxt{r, cur.col, 1 - cur.value};
      used_row[r] = 1;
      path.push_back(nxt);
      row_hop_fn(row_hop_fn, self, nxt);
      path.pop_back();
      used_row[r] = 0;
    }
  };

  for (r0 = 1; r0 <= rows; ++r0)
    for (c0 = 1; c0 <= cols; ++c0) {
      Triple start{r0, c0, value(r0, c0)};
      std::fill(used_row.begin(), used_row.end(), 0);
      std::fill(used_col.begin(), used_col.end(), 0);
      used_row[r0] = 1;
      path.assign(1, start);
      row_hop(row_hop, col_hop, start);
    }
  return out;
}

// Raw subset search: smallest k admitting a defining k-subset of m,
// definingness decided by completion counting.
inline int subset_scs(const PartialMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  const int cells = rows * cols;
  if (cells > 16) throw std::runtime_error("subset_scs: too large");
  for (int k = 0; k <= cells; ++k) {
    std::vector<int> pick(k);
    auto rec = [&](auto&& self, int pos, int from) -> bool {
      if (pos == k) {
        PartialMatrix d(rows, cols, m.margins());
        for (int c : pick) d.set(c / cols + 1, c % cols + 1, m.at(c / cols + 1, c % cols + 1));
        return critset::count_completions(d, critset::CompletionBudget::up_to(2)) == 1;
      }
      for (int c = from; c < cells; ++c) {
        pick[pos] = c;
        if (self(self, pos + 1, c + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0, 0)) return k;
  }
  throw std::runtime_error("subset_scs: no defining subset found");
}

struct SubsetStats {
  int scs = 0;
  int lcs = 0;
};

// Exhaustive subset statistics via the cycle-hitting criterion: D is
// defining iff it meets every cycle; critical iff additionally every cell
// is the sole intersection of some cycle.
inline SubsetStats subset_stats_by_cycles(const PartialMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  const int cells = rows * cols;
  if (cells > 20) throw std::runtime_error("subset_stats_by_cycles: too large");
  std::vector<std::uint32_t> masks;
  for (const auto& cycle : all_cycles(m)) {
    std::uint32_t mask = 0;
    for (const Triple& t : cycle) mask |= 1u << ((t.row - 1) * cols + (t.col - 1));
    masks.push_back(mask);
  }
  SubsetStats out{cells + 1, -1};
  for (std::uint32_t d = 0; d < (1u << cells); ++d) {
    bool defining = true;
    std::uint32_t covered = 0;
    for (std::uint32_t c : masks) {
      std::uint32_t hit = c & d;
      if (hit == 0) {
        defining = false;
        break;
      }
      if ((hit & (hit - 1)) == 0) covered |= hit;
    }
    if (!defining) continue;
    out.scs = std::min(out.scs, static_cast<int>(__builtin_popcount(d)));
    if (covered == d) out.lcs = std::max(out.lcs, static_cast<int>(__builtin_popcount(d)));
  }
  return out;
}

}  // namespace oracle
