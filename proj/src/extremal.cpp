#include "critset/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "critset/completion.hpp"

namespace critset {

std::vector<PartialMatrix> enumerate_class(const ClassSpec& spec, EnumerationMode mode,
                                           int threads) {
  Margins margins = spec.margins();
  const int rows = static_cast<int>(margins.row_sums.size());
  const int cols = static_cast<int>(margins.col_sums.size());
  const int limit_dim = mode == EnumerationMode::Full ? 6 : 4;
  if (rows > limit_dim || cols > limit_dim)
    throw GuardError("enumerate_class: dimension guard exceeded");
  PartialMatrix empty(rows, cols, margins);
  auto all = enumerate_completions(empty, {}, SearchOptions::with_threads(threads));
  if (mode == EnumerationMode::Full) return all;

  const bool square = rows == cols;
  bool self_complementary = true;
  for (int r : margins.row_sums) self_complementary &= 2 * r == cols;
  for (int s : margins.col_sums) self_complementary &= 2 * s == rows;

  // orbit representative = the member with the least text form
  std::vector<Perm> perms_r, perms_c;
  {
    Perm p = identity_perm(rows);
    do perms_r.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    p = identity_perm(cols);
    do perms_c.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::set<std::string> seen;
  std::vector<PartialMatrix> reps;
  for (const auto& m : all) {
    std::string canon = to_text(m);
    for (const auto& rp : perms_r)
      for (const auto& cp : perms_c) {
        PartialMatrix q = permute(m, rp, cp);
        canon = std::min(canon, to_text(q));
        if (square) canon = std::min(canon, to_text(transpose(q)));
        if (self_complementary) {
          canon = std::min(canon, to_text(complement(q)));
          if (square) canon = std::min(canon, to_text(complement(transpose(q))));
        }
      }
    if (seen.insert(canon).second) reps.push_back(m);
  }
  return reps;
}

ScsResult scs_of(const PartialMatrix& m) {
  if (!is_complete(m)) throw std::invalid_argument("scs_of: matrix must be complete");
  const int rows = m.rows(), cols = m.cols();
  if (rows > 8 || cols > 8) throw GuardError("scs_of: dimension guard (8) exceeded");

  // value grid, 0-based
  std::vector<int> v(static_cast<size_t>(rows) * cols);
  std::vector<int> col_zeros(cols, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      v[i * cols + j] = m.at(i + 1, j + 1) == Entry::One;
      col_zeros[j] += !v[i * cols + j];
    }

  // min over row orders of sum over columns of min over depths of
  // (#Zeros below the cut + #Ones above it)
  std::vector<int> order(rows);
  std::iota(order.begin(), order.end(), 0);
  int best = std::numeric_limits<int>::max();
  std::vector<int> best_order;
  do {
    int total = 0;
    for (int j = 0; j < cols; ++j) {
      int cost = col_zeros[j];
      int lowest = cost;
      for (int p = 0; p < rows; ++p) {
        cost += v[order[p] * cols + j] ? 1 : -1;
        lowest = std::min(lowest, cost);
      }
      total += lowest;
    }
    if (total < best) {
      best = total;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  // rebuild the witness for the winning order
  Perm row_perm(rows);
  for (int p = 0; p < rows; ++p) row_perm[best_order[p]] = p + 1;
  std::vector<int> depth_of_col(cols);
  for (int j = 0; j < cols; ++j) {
    int cost = col_zeros[j];
    int lowest = cost, argmin = 0;
    for (int p = 0; p < rows; ++p) {
      cost += v[best_order[p] * cols + j] ? 1 : -1;
      if (cost < lowest) {
        lowest = cost;
        argmin = p + 1;
      }
    }
    depth_of_col[j] = argmin;
  }
  std::vector<int> cols_by_depth(cols);
  std::iota(cols_by_depth.begin(), cols_by_depth.end(), 0);
  std::stable_sort(cols_by_depth.begin(), cols_by_depth.end(),
                   [&](int a, int b) { return depth_of_col[a] < depth_of_col[b]; });
  Perm col_perm(cols);
  std::vector<int> depth(cols);
  for (int pos = 0; pos < cols; ++pos) {
    col_perm[cols_by_depth[pos]] = pos + 1;
    depth[pos] = depth_of_col[cols_by_depth[pos]];
  }
  ScsResult out;
  out.certificate = WalkCertificate{std::move(row_perm), std::move(col_perm),
                                    Walk(rows, std::move(depth))};
  out.set = induced_defining_set(m, out.certificate);
  out.size = out.set.size();
  if (out.size != best) throw std::logic_error("scs_of: witness does not match minimum");
  return out;
}

// nondecreasing depth vectors of length cols over 0..rows
static void all_walk_depths(int rows, int cols, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(cols);
  auto rec = [&](auto&& self, int pos, int low) -> void {
    if (pos == cols) {
      out.push_back(cur);
      return;
    }
    for (int d = low; d <= rows; ++d) {
      cur[pos] = d;
      self(self, pos + 1, d);
    }
  };
  rec(rec, 0, 0);
}

LcsResult lcs_of(const PartialMatrix& m) {
  if (!is_complete(m)) throw std::invalid_argument("lcs_of: matrix must be complete");
  const int rows = m.rows(), cols = m.cols();
  if (rows > 4 || cols > 4) throw GuardError("lcs_of: dimension guard (4) exceeded");

  std::vector<Perm> perms_r, perms_c;
  {
    Perm p = identity_perm(rows);
    do perms_r.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    p = identity_perm(cols);
    do perms_c.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<std::vector<int>> walks;
  all_walk_depths(rows, cols, walks);

  LcsResult out;
  out.size = -1;
  for (const auto& rp : perms_r)
    for (const auto& cp : perms_c) {
      PartialMatrix p = permute(m, rp, cp);
      for (const auto& depths : walks) {
        Walk w(rows, depths);
        if (!verify_block_conditions(p, identity_perm(rows), identity_perm(cols), w)) continue;
        PartialMatrix induced = induced_defining_set(m, rp, cp, w);
        if (induced.size() > out.size) {
          out.size = induced.size();
          out.certificate = WalkCertificate{rp, cp, w};
          out.set = std::move(induced);
        }
      }
    }
  if (out.size < 0) throw std::logic_error("lcs_of: no certificate found");
  return out;
}

ExtremalReport class_report(const ClassSpec& spec, int threads) {
  Margins margins = spec.margins();
  if (margins.row_sums.size() > 4 || margins.col_sums.size() > 4)
    throw GuardError("class_report: dimension guard (4) exceeded");
  auto members = enumerate_class(spec, EnumerationMode::Full, threads);
  if (members.empty()) throw std::invalid_argument("class_report: empty class");

  std::vector<int> scs_sizes(members.size()), lcs_sizes(members.size());
  std::vector<PartialMatrix> scs_sets(members.size()), lcs_sets(members.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, threads))
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(members.size()); ++i) {
    ScsResult s = scs_of(members[i]);
    LcsResult l = lcs_of(members[i]);
    scs_sizes[i] = s.size;
    lcs_sizes[i] = l.size;
    scs_sets[i] = std::move(s.set);
    lcs_sets[i] = std::move(l.set);
  }

  ExtremalReport rep;
  rep.spec = spec;
  rep.matrices_examined = static_cast<long long>(members.size());
  rep.scs = std::numeric_limits<int>::max();
  rep.sup = std::numeric_limits<int>::max();
  rep.lcs = -1;
  rep.inf = -1;
  for (size_t i = 0; i < members.size(); ++i) {
    if (scs_sizes[i] < rep.scs) {
      rep.scs = scs_sizes[i];
      rep.scs_witness = {members[i], scs_sets[i], scs_sizes[i]};
    }
    if (scs_sizes[i] > rep.inf) {
      rep.inf = scs_sizes[i];
      rep.inf_witness = {members[i], scs_sets[i], scs_sizes[i]};
    }
    if (lcs_sizes[i] > rep.lcs) {
      rep.lcs = lcs_sizes[i];
      rep.lcs_witness = {members[i], lcs_sets[i], lcs_sizes[i]};
    }
    if (lcs_sizes[i] < rep.sup) {
      rep.sup = lcs_sizes[i];
      rep.sup_witness = {members[i], lcs_sets[i], lcs_sizes[i]};
    }
  }
  if (!(rep.scs <= rep.inf && rep.sup <= rep.lcs && rep.scs <= rep.lcs))
    throw std::logic_error("class_report: inconsistent statistics");
  return rep;
}

PartialMatrix random_member(const ClassSpec& spec, std::uint64_t seed) {
  Margins margins = spec.margins();
  const int rows = static_cast<int>(margins.row_sums.size());
  const int cols = static_cast<int>(margins.col_sums.size());
  PartialMatrix grid(rows, cols, margins);
  std::mt19937_64 rng(seed);

  std::vector<int> row_ones(rows, 0), row_zeros(rows, 0), col_ones(cols, 0), col_zeros(cols, 0);
  auto fits = [&](int i, int j, int v) {
    if (v)
      return row_ones[i - 1] < margins.row_sums[i - 1] &&
             col_ones[j - 1] < margins.col_sums[j - 1];
    return row_zeros[i - 1] < cols - margins.row_sums[i - 1] &&
           col_zeros[j - 1] < rows - margins.col_sums[j - 1];
  };
  auto place = [&](int i, int j, int v) {
    grid.set(i, j, entry_of(v));
    (v ? row_ones[i - 1] : row_zeros[i - 1])++;
    (v ? col_ones[j - 1] : col_zeros[j - 1])++;
  };
  auto unplace = [&](int i, int j) {
    int v = grid.at(i, j) == Entry::One;
    grid.set(i, j, Entry::Empty);
    (v ? row_ones[i - 1] : row_zeros[i - 1])--;
    (v ? col_ones[j - 1] : col_zeros[j - 1])--;
  };
  auto rec = [&](auto&& self, int pos) -> bool {
    if (pos == rows * cols) return true;
    int i = pos / cols + 1, j = pos % cols + 1;
    int first = static_cast<int>(rng() & 1);
    for (int v : {first, 1 - first}) {
      if (!fits(i, j, v)) continue;
      place(i, j, v);
      if (self(self, pos + 1)) return true;
      unplace(i, j);
    }
    return false;
  };
  if (!rec(rec, 0)) throw std::invalid_argument("random_member: empty class");
  return grid;
}

SpotReport class_scs_spot(const ClassSpec& spec, int sample, std::uint64_t seed, int threads) {
  Margins margins = spec.margins();
  if (margins.row_sums.size() > 6 || margins.col_sums.size() > 6)
    throw GuardError("class_scs_spot: dimension guard (6) exceeded");
  if (sample < 1) throw std::invalid_argument("class_scs_spot: sample >= 1");

  std::vector<PartialMatrix> members(sample);
  for (int i = 0; i < sample; ++i) members[i] = random_member(spec, seed + i);

  std::vector<int> sizes(sample);
  std::vector<PartialMatrix> sets(sample);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, threads))
#endif
  for (std::int64_t i = 0; i < sample; ++i) {
    ScsResult s = scs_of(members[i]);
    sizes[i] = s.size;
    sets[i] = std::move(s.set);
  }

  SpotReport rep;
  rep.spec = spec;
  rep.sample = sample;
  rep.seed = seed;
  rep.min_scs = std::numeric_limits<int>::max();
  rep.max_scs = -1;
  for (int i = 0; i < sample; ++i) {
    if (sizes[i] < rep.min_scs) {
      rep.min_scs = sizes[i];
      rep.min_witness = {members[i], sets[i], sizes[i]};
    }
    if (sizes[i] > rep.max_scs) {
      rep.max_scs = sizes[i];
      rep.max_witness = {members[i], sets[i], sizes[i]};
    }
  }
  return rep;
}

}  // namespace critset
