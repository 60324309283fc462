#include "critset/trades.hpp"

#include <algorithm>
#include <functional>

namespace critset {

bool valid_trade(const Trade& t) {
  const PartialMatrix& a = t.body;
  const PartialMatrix& b = t.mate;
  if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.margins() == b.margins()))
    return false;
  if (a.size() == 0 || a.size() != b.size()) return false;
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= a.cols(); ++j) {
      Entry ea = a.at(i, j), eb = b.at(i, j);
      if ((ea == Entry::Empty) != (eb == Entry::Empty)) return false;
      if (ea != Entry::Empty && ea == eb) return false;
    }
  // equal per-line counts of 1s and of 0s, rows then columns
  for (int i = 1; i <= a.rows(); ++i) {
    int a1 = 0, a0 = 0, b1 = 0, b0 = 0;
    for (int j = 1; j <= a.cols(); ++j) {
      a1 += a.at(i, j) == Entry::One;
      a0 += a.at(i, j) == Entry::Zero;
      b1 += b.at(i, j) == Entry::One;
      b0 += b.at(i, j) == Entry::Zero;
    }
    if (a1 != b1 || a0 != b0) return false;
  }
  for (int j = 1; j <= a.cols(); ++j) {
    int a1 = 0, a0 = 0, b1 = 0, b0 = 0;
    for (int i = 1; i <= a.rows(); ++i) {
      a1 += a.at(i, j) == Entry::One;
      a0 += a.at(i, j) == Entry::Zero;
      b1 += b.at(i, j) == Entry::One;
      b0 += b.at(i, j) == Entry::Zero;
    }
    if (a1 != b1 || a0 != b0) return false;
  }
  return true;
}

Trade make_trade(PartialMatrix body, PartialMatrix mate) {
  Trade t{std::move(body), std::move(mate)};
  if (!valid_trade(t)) throw std::invalid_argument("make_trade: trade invariants violated");
  return t;
}

std::optional<Trade> trade_between(const PartialMatrix& m1, const PartialMatrix& m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols() || !(m1.margins() == m2.margins()))
    throw std::invalid_argument("trade_between: margin mismatch");
  if (!is_complete(m1) || !is_complete(m2))
    throw std::invalid_argument("trade_between: inputs must be complete");
  PartialMatrix body(m1.rows(), m1.cols(), m1.margins());
  PartialMatrix mate(m1.rows(), m1.cols(), m1.margins());
  for (int i = 1; i <= m1.rows(); ++i)
    for (int j = 1; j <= m1.cols(); ++j)
      if (m1.at(i, j) != m2.at(i, j)) {
        body.set(i, j, m1.at(i, j));
        mate.set(i, j, m2.at(i, j));
      }
  if (body.size() == 0) return std::nullopt;
  return make_trade(std::move(body), std::move(mate));
}

std::vector<Triple> Cycle::sorted() const {
  std::vector<Triple> out = circuit;
  std::sort(out.begin(), out.end());
  return out;
}

bool valid_cycle(const Cycle& c) {
  const auto& p = c.circuit;
  const size_t n = p.size();
  if (n < 4 || n % 2 != 0) return false;
  for (size_t t = 0; t < n; ++t) {
    const Triple& cur = p[t];
    const Triple& nxt = p[(t + 1) % n];
    if (nxt.value != 1 - cur.value) return false;
    if (t % 2 == 0) {  // row hop
      if (nxt.row != cur.row || nxt.col == cur.col) return false;
    } else {  // column hop
      if (nxt.col != cur.col || nxt.row == cur.row) return false;
    }
  }
  // circuit starts at its least cell
  for (size_t t = 1; t < n; ++t)
    if (Cell{p[t].row, p[t].col} < Cell{p[0].row, p[0].col}) return false;
  // simple: every touched line holds exactly two cells
  auto cells = c.sorted();
  if (std::adjacent_find(cells.begin(), cells.end(), [](const Triple& a, const Triple& b) {
        return a.row == b.row && a.col == b.col;
      }) != cells.end())
    return false;
  return true;
}

Trade cycle_trade(const Cycle& c, int rows, int cols, const Margins& margins) {
  PartialMatrix body(rows, cols, margins);
  PartialMatrix mate(rows, cols, margins);
  for (const Triple& t : c.circuit) {
    body.set(t.row, t.col, entry_of(t.value));
    mate.set(t.row, t.col, entry_of(1 - t.value));
  }
  return Trade{std::move(body), std::move(mate)};
}

namespace {

// Iterative-deepening search for the shortest alternating cycle starting
// at (r0,c0), first hop along the row; continuations in index order, so
// the result is deterministic.
struct CycleSearch {
  int rows, cols;
  std::function<int(int, int)> value_at;  // -1 unavailable, else 0/1
  int r0 = 0, c0 = 0;
  size_t limit = 0;
  std::vector<char> used_row, used_col;
  std::vector<Triple> path;

  bool row_hop(const Triple& cur, size_t t) {
    for (int c = 1; c <= cols; ++c) {
      if (c == cur.col || used_col[c]) continue;
      int v = value_at(cur.row, c);
      if (v != 1 - cur.value) continue;
      Triple nxt{cur.row, c, v};
      if (c == c0) {
        if (t + 2 >= 4) {
          path.push_back(nxt);
          return true;
        }
        continue;
      }
      if (t + 4 > limit) continue;  // needs at least a column hop and a closing cell
      used_col[c] = 1;
      path.push_back(nxt);
      if (col_hop(nxt, t + 1)) return true;
      path.pop_back();
      used_col[c] = 0;
    }
    return false;
  }

  bool col_hop(const Triple& cur, size_t t) {
    for (int r = 1; r <= rows; ++r) {
      if (r == cur.row || used_row[r]) continue;
      int v = value_at(r, cur.col);
      if (v != 1 - cur.value) continue;
      if (t + 3 > limit) continue;  // the closing cell is still to come
      Triple nxt{r, cur.col, v};
      used_row[r] = 1;
      path.push_back(nxt);
      if (row_hop(nxt, t + 1)) return true;
      path.pop_back();
      used_row[r] = 0;
    }
    return false;
  }

  std::optional<Cycle> run() {
    int v0 = value_at(r0, c0);
    if (v0 < 0) return std::nullopt;
    size_t max_len = 2 * static_cast<size_t>(std::min(rows, cols));
    for (size_t len = 4; len <= max_len; len += 2) {
      limit = len;
      used_row.assign(rows + 1, 0);
      used_col.assign(cols + 1, 0);
      path.clear();
      Triple start{r0, c0, v0};
      path.push_back(start);
      used_row[r0] = 1;
      if (row_hop(start, 0)) return Cycle{path};
    }
    return std::nullopt;
  }
};

}  // namespace

std::vector<Cycle> decompose_cycles(const Trade& t) {
  if (!valid_trade(t)) throw std::invalid_argument("decompose_cycles: invalid trade");
  PartialMatrix remaining = t.body;
  std::vector<Cycle> out;
  while (remaining.size() > 0) {
    Triple start = remaining.triples().front();
    CycleSearch search;
    search.rows = remaining.rows();
    search.cols = remaining.cols();
    search.r0 = start.row;
    search.c0 = start.col;
    search.value_at = [&remaining](int r, int c) {
      Entry e = remaining.at(r, c);
      return e == Entry::Empty ? -1 : (e == Entry::One ? 1 : 0);
    };
    auto cycle = search.run();
    if (!cycle) throw std::invalid_argument("decompose_cycles: trade has no cycle decomposition");
    for (const Triple& cell : cycle->circuit) remaining.set(cell.row, cell.col, Entry::Empty);
    out.push_back(std::move(*cycle));
  }
  return out;
}

// rotate so the least cell comes first with its row partner next
static Cycle canonical_cycle(std::vector<Triple> circuit) {
  const size_t n = circuit.size();
  size_t least = 0;
  for (size_t k = 1; k < n; ++k)
    if (Cell{circuit[k].row, circuit[k].col} < Cell{circuit[least].row, circuit[least].col})
      least = k;
  std::vector<Triple> out;
  out.reserve(n);
  const bool forward = circuit[(least + 1) % n].row == circuit[least].row;
  for (size_t k = 0; k < n; ++k)
    out.push_back(forward ? circuit[(least + k) % n] : circuit[(least + n - k) % n]);
  return Cycle{std::move(out)};
}

std::optional<Cycle> find_cycle_through(const PartialMatrix& m, const PartialMatrix& d,
                                        Cell cell) {
  if (!subset_of(d, m)) throw std::invalid_argument("find_cycle_through: d not a subset of m");
  if (!d.filled(cell.row, cell.col))
    throw std::invalid_argument("find_cycle_through: cell is not in d");
  CycleSearch search;
  search.rows = m.rows();
  search.cols = m.cols();
  search.r0 = cell.row;
  search.c0 = cell.col;
  search.value_at = [&m, &d, cell](int r, int c) {
    if (d.filled(r, c) && !(r == cell.row && c == cell.col)) return -1;
    Entry e = m.at(r, c);
    return e == Entry::Empty ? -1 : (e == Entry::One ? 1 : 0);
  };
  auto found = search.run();
  if (!found) return std::nullopt;
  return canonical_cycle(std::move(found->circuit));
}

PartialMatrix apply_trade(const PartialMatrix& m, const Trade& t) {
  if (!valid_trade(t)) throw std::invalid_argument("apply_trade: invalid trade");
  if (!subset_of(t.body, m))
    throw std::invalid_argument("apply_trade: trade body not contained in matrix");
  PartialMatrix out = m;
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      if (t.mate.filled(i, j)) out.set(i, j, t.mate.at(i, j));
  return out;
}

PartialMatrix apply_cycle(const PartialMatrix& m, const Cycle& c) {
  return apply_trade(m, cycle_trade(c, m.rows(), m.cols(), m.margins()));
}

}  // namespace critset
