#include "critset/walks.hpp"

#include <algorithm>
#include <numeric>

namespace critset {

Walk::Walk(int rows, std::vector<int> depth) : rows_(rows), depth_(std::move(depth)) {
  if (rows_ <= 0 || depth_.empty()) throw std::invalid_argument("Walk: empty grid");
  int prev = 0;
  for (int d : depth_) {
    if (d < prev || d > rows_)
      throw std::invalid_argument("Walk: depths must be nondecreasing within 0..rows");
    prev = d;
  }
}

Walk Walk::from_points(int rows, int cols, const std::vector<std::pair<int, int>>& points) {
  if (points.size() != static_cast<size_t>(rows + cols + 1))
    throw std::invalid_argument("Walk: wrong number of points");
  if (points.front() != std::pair<int, int>{0, 0} ||
      points.back() != std::pair<int, int>{cols, -rows})
    throw std::invalid_argument("Walk: must run from (0,0) to (cols,-rows)");
  std::vector<int> depth(cols, -1);
  for (size_t k = 0; k + 1 < points.size(); ++k) {
    auto [x0, y0] = points[k];
    auto [x1, y1] = points[k + 1];
    if (x1 == x0 + 1 && y1 == y0) {
      depth[x0] = -y0;  // East step over column x0+1 at depth -y0
    } else if (x1 != x0 || y1 != y0 - 1) {
      throw std::invalid_argument("Walk: steps must be East or South");
    }
  }
  return Walk(rows, depth);
}

std::vector<std::pair<int, int>> Walk::points() const {
  std::vector<std::pair<int, int>> out;
  int x = 0, y = 0;
  out.emplace_back(x, y);
  for (int j = 1; j <= cols(); ++j) {
    while (-y < depth(j)) out.emplace_back(x, --y);
    out.emplace_back(++x, y);
  }
  while (-y < rows_) out.emplace_back(x, --y);
  return out;
}

Walk transpose_walk(const Walk& w) {
  std::vector<int> depth(w.rows());
  for (int i = 1; i <= w.rows(); ++i) {
    int count = 0;
    for (int j = 1; j <= w.cols(); ++j) count += w.depth(j) < i;
    depth[i - 1] = count;
  }
  return Walk(w.cols(), std::move(depth));
}

std::pair<int, int> BlockStructure::row_range(int i) const {
  int lo = 1;
  for (int k = 1; k < i; ++k) lo += row_runs[k - 1];
  return {lo, lo + row_runs[i - 1] - 1};
}

std::pair<int, int> BlockStructure::col_range(int j) const {
  int lo = 1;
  for (int k = 1; k < j; ++k) lo += col_runs[k - 1];
  return {lo, lo + col_runs[j - 1] - 1};
}

long long BlockStructure::block_size(int i, int j) const {
  return static_cast<long long>(row_runs[i - 1]) * col_runs[j - 1];
}

std::vector<std::pair<int, int>> BlockStructure::corners() const {
  std::vector<std::pair<int, int>> out;
  int x = 0, y = 0;
  out.emplace_back(x, y);
  for (int j = 1; j <= Lp(); ++j) {
    x += col_runs[j - 1];
    out.emplace_back(x, y);
    if (j <= L()) {
      y -= row_runs[j - 1];
      out.emplace_back(x, y);
    }
  }
  return out;
}

BlockStructure block_structure(const Walk& w) {
  if (!w.starts_east())
    throw std::invalid_argument(
        "block_structure: walk starts South; apply the transpose-complement normalization");
  BlockStructure b;
  b.rows = w.rows();
  b.cols = w.cols();
  for (int j = 1; j <= w.cols(); ++j) {
    if (j == 1 || w.depth(j) != w.depth(j - 1)) {
      b.col_runs.push_back(1);
      b.run_depth.push_back(w.depth(j));
    } else {
      b.col_runs.back()++;
    }
  }
  for (size_t k = 1; k < b.run_depth.size(); ++k)
    b.row_runs.push_back(b.run_depth[k] - b.run_depth[k - 1]);
  if (b.run_depth.back() < b.rows) b.row_runs.push_back(b.rows - b.run_depth.back());
  return b;
}

PartialMatrix induced_defining_set(const PartialMatrix& m, const Perm& row_perm,
                                   const Perm& col_perm, const Walk& w, bool flipped) {
  if (static_cast<int>(row_perm.size()) != m.rows() ||
      static_cast<int>(col_perm.size()) != m.cols() || !is_permutation(row_perm) ||
      !is_permutation(col_perm))
    throw std::invalid_argument("induced_defining_set: invalid permutation");
  if (w.rows() != m.rows() || w.cols() != m.cols())
    throw std::invalid_argument("induced_defining_set: walk does not fit the grid");
  PartialMatrix out(m.rows(), m.cols(), m.margins());
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) {
      Entry e = m.at(i, j);
      if (e == Entry::Empty) continue;
      bool above = w.above(row_perm[i - 1], col_perm[j - 1]);
      Entry caught = above ? (flipped ? Entry::Zero : Entry::One)
                           : (flipped ? Entry::One : Entry::Zero);
      if (e == caught) out.set(i, j, e);
    }
  return out;
}

PartialMatrix induced_defining_set(const PartialMatrix& m, const WalkCertificate& cert,
                                   bool flipped) {
  return induced_defining_set(m, cert.row_perm, cert.col_perm, cert.walk, flipped);
}

bool verify_block_conditions(const PartialMatrix& m, const Perm& row_perm, const Perm& col_perm,
                    const Walk& w) {
  if (!is_complete(m)) throw std::invalid_argument("verify_block_conditions: matrix must be complete");
  PartialMatrix p = permute(m, row_perm, col_perm);
  Walk walk = w;
  if (!walk.starts_east()) {
    p = complement(transpose(p));
    walk = transpose_walk(walk);
  }
  BlockStructure b = block_structure(walk);
  for (int i = 1; i <= b.L(); ++i) {
    auto [rlo, rhi] = b.row_range(i);
    auto [clo, chi] = b.col_range(i);
    for (int r = rlo; r <= rhi; ++r)
      for (int c = clo; c <= chi; ++c)
        if (p.at(r, c) != Entry::One) return false;
  }
  for (int i = 1; i + 1 <= b.Lp(); ++i) {
    auto [rlo, rhi] = b.row_range(i);
    auto [clo, chi] = b.col_range(i + 1);
    for (int r = rlo; r <= rhi; ++r)
      for (int c = clo; c <= chi; ++c)
        if (p.at(r, c) != Entry::Zero) return false;
  }
  return true;
}

bool verify_block_conditions(const PartialMatrix& m, const WalkCertificate& cert) {
  return verify_block_conditions(m, cert.row_perm, cert.col_perm, cert.walk);
}

Walk complement_walk(const BlockStructure& b) {
  std::vector<int> depth(b.cols);
  int col = 0;
  int boundary = 0;
  for (int j = 1; j <= b.Lp(); ++j) {
    int d;
    if (j <= b.L()) {
      boundary += b.row_runs[j - 1];
      d = boundary;
    } else {
      d = b.rows;
    }
    for (int k = 0; k < b.col_runs[j - 1]; ++k) depth[col++] = d;
  }
  return Walk(b.rows, std::move(depth));
}

namespace {

// Row orders under which, within the free cells, every Zero sits above
// every One in each column.  Lexicographic depth-first search.
struct CertificateSearch {
  const PartialMatrix* free = nullptr;  // m minus d
  int rows = 0, cols = 0;
  std::vector<int> order;         // original row index per position
  std::vector<char> placed;       // by original row
  std::vector<char> one_seen;     // per column, a free One already placed
  std::optional<std::vector<int>> result;

  bool can_append(int row) const {
    for (int c = 1; c <= cols; ++c)
      if (free->at(row, c) == Entry::Zero && one_seen[c]) return false;
    return true;
  }

  void dfs() {
    if (result) return;
    if (static_cast<int>(order.size()) == rows) {
      result = order;
      return;
    }
    for (int row = 1; row <= rows; ++row) {
      if (placed[row] || !can_append(row)) continue;
      std::vector<int> touched;
      for (int c = 1; c <= cols; ++c)
        if (free->at(row, c) == Entry::One && !one_seen[c]) {
          one_seen[c] = 1;
          touched.push_back(c);
        }
      placed[row] = 1;
      order.push_back(row);
      dfs();
      order.pop_back();
      placed[row] = 0;
      for (int c : touched) one_seen[c] = 0;
      if (result) return;
    }
  }
};

}  // namespace

std::optional<WalkCertificate> search_walk_certificate(const PartialMatrix& m,
                                                       const PartialMatrix& d) {
  if (!is_complete(m))
    throw std::invalid_argument("search_walk_certificate: matrix must be complete");
  if (!subset_of(d, m))
    throw std::invalid_argument("search_walk_certificate: d not a subset of m");
  if (m.rows() > 8 || m.cols() > 8)
    throw GuardError("search_walk_certificate: desk-scale guard (max dimension 8) exceeded");

  PartialMatrix free = difference(m, d);
  CertificateSearch search;
  search.free = &free;
  search.rows = m.rows();
  search.cols = m.cols();
  search.placed.assign(m.rows() + 1, 0);
  search.one_seen.assign(m.cols() + 1, 0);
  search.dfs();
  if (!search.result) return std::nullopt;

  const std::vector<int>& order = *search.result;
  Perm row_perm(m.rows());
  for (int pos = 1; pos <= m.rows(); ++pos) row_perm[order[pos - 1] - 1] = pos;

  // smallest valid depth per column: the deepest free Zero's position
  std::vector<int> col_depth(m.cols() + 1, 0);
  for (int pos = 1; pos <= m.rows(); ++pos) {
    int row = order[pos - 1];
    for (int c = 1; c <= m.cols(); ++c)
      if (free.at(row, c) == Entry::Zero) col_depth[c] = pos;
  }
  std::vector<int> cols_by_depth(m.cols());
  std::iota(cols_by_depth.begin(), cols_by_depth.end(), 1);
  std::stable_sort(cols_by_depth.begin(), cols_by_depth.end(),
                   [&](int a, int b) { return col_depth[a] < col_depth[b]; });
  Perm col_perm(m.cols());
  std::vector<int> depth(m.cols());
  for (int pos = 1; pos <= m.cols(); ++pos) {
    col_perm[cols_by_depth[pos - 1] - 1] = pos;
    depth[pos - 1] = col_depth[cols_by_depth[pos - 1]];
  }
  return WalkCertificate{std::move(row_perm), std::move(col_perm), Walk(m.rows(), std::move(depth))};
}

}  // namespace critset
