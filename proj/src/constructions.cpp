#include "critset/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "critset/fixtures.hpp"

namespace critset {

static int mod(int a, int n) { return ((a % n) + n) % n; }

static bool x_zero_cell(int m, int i, int j) {
  int r = mod(i - j, 2 * m);
  return (r >= 1 && r <= m - 1) || r == 2 * m - 1;
}

PartialMatrix build_x(int m) {
  if (m < 1) throw std::invalid_argument("build_x: need m >= 1");
  const int n = 2 * m;
  PartialMatrix x(n, n, Margins::uniform(n, m));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      x.set(i, j, x_zero_cell(m, i, j) ? Entry::Zero : Entry::One);
  return x;
}

// depth j-1: the walk bordering the main diagonal from above
static Walk diagonal_walk(int n) {
  std::vector<int> depth(n);
  std::iota(depth.begin(), depth.end(), 0);
  return Walk(n, std::move(depth));
}

static Walk y_walk(int m) {
  const int n = 2 * m;
  std::vector<int> depth(n);
  std::iota(depth.begin(), depth.end(), 0);
  depth[n - 1] = n;  // cell (2m,2m) lies above the walk
  return Walk(n, std::move(depth));
}

static CertifiedCriticalSet certify(PartialMatrix matrix, WalkCertificate cert,
                                    int expected_size) {
  CertifiedCriticalSet out;
  out.cells = induced_defining_set(matrix, cert);
  out.matrix = std::move(matrix);
  if (!verify_block_conditions(out.matrix, cert))
    throw std::logic_error("construction violates the block conditions");
  if (out.cells.size() != expected_size)
    throw std::logic_error("construction yields size " + std::to_string(out.cells.size()) +
                           ", expected " + std::to_string(expected_size));
  out.certificate = std::move(cert);
  return out;
}

CertifiedCriticalSet critical_x(int m) {
  PartialMatrix x = build_x(m);
  const int n = 2 * m;
  WalkCertificate cert{identity_perm(n), identity_perm(n), diagonal_walk(n)};
  return certify(std::move(x), std::move(cert), 3 * m * m - 4 * m + 2);
}

PartialMatrix build_y(int m) {
  if (m < 3) throw std::invalid_argument("build_y: need m >= 3");
  PartialMatrix y = build_x(m);
  const int n = 2 * m;
  for (Cell c : {Cell{m - 1, n - 1}, Cell{m - 1, n}, Cell{n, n - 1}, Cell{n, n}})
    y.set(c.row, c.col, flipped(y.at(c.row, c.col)));
  return y;
}

CertifiedCriticalSet critical_y(int m) {
  PartialMatrix y = build_y(m);
  const int n = 2 * m;
  WalkCertificate cert{identity_perm(n), identity_perm(n), y_walk(m)};
  return certify(std::move(y), std::move(cert), 3 * m * m - 4 * m + 1);
}

CertifiedCriticalSet build_m_k(int m, int k) {
  if (m < 1) throw std::invalid_argument("build_m_k: need m >= 1");
  const int lo = m * m, hi = m * m + (m - 1) * (m - 1);
  if (k < lo || k > hi)
    throw std::invalid_argument("build_m_k: need m^2 <= k <= m^2+(m-1)^2");
  const int n = 2 * m;
  int alpha = 0, beta = 0;
  if (m >= 2) {
    alpha = (k - lo) / (m - 1);
    beta = (k - lo) % (m - 1);
  }
  std::vector<int> depth(n, 0);
  if (beta == 0) {
    for (int j = m + 1; j <= n - 1; ++j) depth[j - 1] = m - alpha;
  } else {
    for (int j = m + 1; j <= m + beta; ++j) depth[j - 1] = m - alpha - 1;
    for (int j = m + beta + 1; j <= n - 1; ++j) depth[j - 1] = m - alpha;
  }
  depth[n - 1] = m;
  Walk walk(n, std::move(depth));

  // fill the top-right quadrant from the walk; reflect with complementation
  // into the other three quadrants (each line then holds m Ones)
  PartialMatrix mat(n, n, Margins::uniform(n, m));
  for (int i = 1; i <= m; ++i)
    for (int j = m + 1; j <= n; ++j) {
      int q = i > walk.depth(j) ? 1 : 0;
      mat.set(i, j, entry_of(q));
      mat.set(i, j - m, entry_of(1 - q));
      mat.set(i + m, j, entry_of(1 - q));
      mat.set(i + m, j - m, entry_of(q));
    }
  WalkCertificate cert{identity_perm(n), identity_perm(n), std::move(walk)};
  return certify(std::move(mat), std::move(cert), k);
}

static std::vector<Cell> family_index_set(int m) {
  std::vector<Cell> cells;
  for (int i = m + 1; i <= 2 * m; ++i)
    for (int j = 1; j < m - 2; ++j)
      if (i - j >= m && i - j < 2 * m - 1) cells.push_back({i, j});
  return cells;
}

std::vector<FamilyTrade> trade_family(int m) {
  if (m < 4) throw std::invalid_argument("trade_family: need m >= 4");
  const int n = 2 * m;
  Margins margins = Margins::uniform(n, m);
  std::vector<FamilyTrade> out;
  for (Cell c : family_index_set(m)) {
    const int i = c.row, j = c.col;
    PartialMatrix body(n, n, margins), mate(n, n, margins);
    auto put = [&](int r, int cc, int v) {
      body.set(r, cc, entry_of(v));
      mate.set(r, cc, entry_of(1 - v));
    };
    put(i, j, 1);
    put(i - m + 1, i - j, 1);
    put(i, i - j, 0);
    put(i - m + 1, j, 0);
    out.push_back({c, make_trade(std::move(body), std::move(mate))});
  }
  return out;
}

bool validate_trade_family(int m) {
  if (m < 4) return false;
  auto cells = family_index_set(m);
  if (static_cast<long long>(cells.size()) != static_cast<long long>(m) * (m + 1) / 2 - 7)
    return false;
  auto above_diagonal_walk = [](Cell c) { return c.row <= c.col - 1; };
  std::vector<Cell> all;
  for (Cell c : cells) {
    const int i = c.row, j = c.col;
    Cell one_below{i, j}, one_above{i - m + 1, i - j};
    Cell zero_a{i, i - j}, zero_b{i - m + 1, j};
    if (x_zero_cell(m, one_below.row, one_below.col)) return false;
    if (x_zero_cell(m, one_above.row, one_above.col)) return false;
    if (!x_zero_cell(m, zero_a.row, zero_a.col)) return false;
    if (!x_zero_cell(m, zero_b.row, zero_b.col)) return false;
    if (!above_diagonal_walk(one_above)) return false;
    if (above_diagonal_walk(one_below) || above_diagonal_walk(zero_a) ||
        above_diagonal_walk(zero_b))
      return false;
    for (Cell cc : {one_below, one_above, zero_a, zero_b}) all.push_back(cc);
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

CertifiedCriticalSet spectrum_upper(int m, int k) {
  if (m < 4) throw std::invalid_argument("spectrum_upper: need m >= 4");
  const int x_top = 3 * m * m - 4 * m + 2;
  const long long max_alpha = static_cast<long long>(m) * (m + 1) / 2 - 7;
  const bool use_x = (x_top - k) % 2 == 0;
  const int top = use_x ? x_top : x_top - 1;
  const int alpha = (top - k) / 2;
  if (k > top || alpha < 0 || alpha > max_alpha)
    throw std::invalid_argument("spectrum_upper: k out of range for this m");
  PartialMatrix mat = use_x ? build_x(m) : build_y(m);
  auto family = trade_family(m);
  for (int t = 0; t < alpha; ++t) mat = apply_trade(mat, family[t].trade);
  const int n = 2 * m;
  WalkCertificate cert{identity_perm(n), identity_perm(n),
                       use_x ? diagonal_walk(n) : y_walk(m)};
  return certify(std::move(mat), std::move(cert), k);
}

static CertifiedCriticalSet fixture_critical(const std::string& name) {
  Fixture f = load_fixture(name);
  auto cert = search_walk_certificate(f.matrix, f.marked);
  if (!cert) throw std::logic_error("fixture " + name + " admits no walk certificate");
  CertifiedCriticalSet out;
  out.matrix = std::move(f.matrix);
  out.cells = std::move(f.marked);
  out.certificate = std::move(*cert);
  return out;
}

std::map<int, CertifiedCriticalSet> spectrum(int m) {
  if (m < 1) throw std::invalid_argument("spectrum: need m >= 1");
  std::map<int, CertifiedCriticalSet> out;
  const int top = 3 * m * m - 4 * m + 2;
  const int mk_hi = m * m + (m - 1) * (m - 1);
  for (int k = m * m; k <= top; ++k) {
    if (k <= mk_hi)
      out.emplace(k, build_m_k(m, k));
    else if (k == top)
      out.emplace(k, critical_x(m));
    else if (k == top - 1 && m >= 3)
      out.emplace(k, critical_y(m));
    else if (m == 3 && (k == 14 || k == 15))
      out.emplace(k, fixture_critical(k == 14 ? "fig1" : "filly-left"));
    else if (m == 4 && k == 26)
      out.emplace(k, fixture_critical("filly-right"));
    else
      out.emplace(k, spectrum_upper(m, k));
  }
  return out;
}

std::pair<CertifiedCriticalSet, CertifiedCriticalSet> sup_pair(const PartialMatrix& mat,
                                                               const SearchOptions& opts) {
  const int n = mat.rows();
  if (mat.cols() != n || n % 2 != 0)
    throw std::invalid_argument("sup_pair: need a square matrix of even order");
  const int m = n / 2;
  if (m < 2) throw std::invalid_argument("sup_pair: need m >= 2");
  for (int v : mat.margins().row_sums)
    if (v != m) throw std::invalid_argument("sup_pair: need uniform line sum m");
  for (int v : mat.margins().col_sums)
    if (v != m) throw std::invalid_argument("sup_pair: need uniform line sum m");
  if (!is_complete(mat)) throw std::invalid_argument("sup_pair: matrix must be complete");

  // normalization: Ones of row 1 into columns 1..m, then Ones of column 1
  // into rows 1..m
  std::vector<int> col_order(n), row_order(n);
  std::iota(col_order.begin(), col_order.end(), 1);
  std::stable_sort(col_order.begin(), col_order.end(),
                   [&](int a, int b) { return (mat.at(1, a) == Entry::One) > (mat.at(1, b) == Entry::One); });
  Perm col_perm(n);
  for (int pos = 1; pos <= n; ++pos) col_perm[col_order[pos - 1] - 1] = pos;
  PartialMatrix p1 = permute(mat, identity_perm(n), col_perm);

  std::iota(row_order.begin(), row_order.end(), 1);
  std::stable_sort(row_order.begin() + 1, row_order.end(),
                   [&](int a, int b) { return (p1.at(a, 1) == Entry::One) > (p1.at(b, 1) == Entry::One); });
  Perm row_perm(n);
  for (int pos = 1; pos <= n; ++pos) row_perm[row_order[pos - 1] - 1] = pos;
  PartialMatrix p = permute(p1, row_perm, identity_perm(n));

  if (p.at(1, 1) != Entry::One) throw std::logic_error("sup_pair: normalization failed");

  auto zone = [m](int i) { return i == 1 ? 1 : (i <= m ? 2 : 3); };

  // C1: (1,1,1), every Zero of M22 u M23 u M32, minimized over M33 Zeros
  PartialMatrix d1(n, n, p.margins());
  d1.set(1, 1, Entry::One);
  std::vector<Cell> candidates1;
  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= n; ++j) {
      if (p.at(i, j) != Entry::Zero) continue;
      int zi = zone(i), zj = zone(j);
      if (zi == 3 && zj == 3) {
        d1.set(i, j, Entry::Zero);
        candidates1.push_back({i, j});
      } else {
        d1.set(i, j, Entry::Zero);
      }
    }
  PartialMatrix c1 = minimize_to_critical(p, d1, candidates1, opts).cells;

  // C2: every One of M33 u M23 u M32, minimized over M22 Ones
  PartialMatrix d2(n, n, p.margins());
  std::vector<Cell> candidates2;
  for (int i = 2; i <= n; ++i)
    for (int j = 2; j <= n; ++j) {
      if (p.at(i, j) != Entry::One) continue;
      int zi = zone(i), zj = zone(j);
      if (zi == 2 && zj == 2) {
        d2.set(i, j, Entry::One);
        candidates2.push_back({i, j});
      } else {
        d2.set(i, j, Entry::One);
      }
    }
  PartialMatrix c2 = minimize_to_critical(p, d2, candidates2, opts).cells;

  Perm inv_r = inverse_perm(row_perm), inv_c = inverse_perm(col_perm);
  CertifiedCriticalSet out1{mat, permute(c1, inv_r, inv_c), std::nullopt, {}};
  CertifiedCriticalSet out2{mat, permute(c2, inv_r, inv_c), std::nullopt, {}};
  return {std::move(out1), std::move(out2)};
}

PartialMatrix build_b(int m) {
  if (m < 1) throw std::invalid_argument("build_b: need m >= 1");
  const int n = 2 * m;
  PartialMatrix b(n, n, Margins::uniform(n, m));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      b.set(i, j, (i - 1) / m == (j - 1) / m ? Entry::One : Entry::Zero);
  return b;
}

long long b_critical_size(const CompositionPair& c) {
  long long total = 0;
  for (int i = 1; i <= static_cast<int>(c.s.size()); ++i)
    for (int j = 1; j <= static_cast<int>(c.t.size()); ++j) {
      const bool odd = (i + j) % 2 == 1;
      if ((odd && i > j) || (!odd && i < j))
        total += static_cast<long long>(c.s[i - 1]) * c.t[j - 1];
    }
  return total;
}

// compositions of `total` into exactly `parts` positive parts
static void compositions_into(int total, int parts, std::vector<int>& cur,
                              std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (total >= 1) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int first = 1; first + parts - 1 <= total; ++first) {
    cur.push_back(first);
    compositions_into(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

// all run sequences whose odd-indexed parts sum to m and even-indexed
// parts sum to m
static std::vector<std::vector<int>> run_sequences(int m) {
  std::vector<std::vector<std::vector<int>>> comps(m + 1);
  for (int parts = 1; parts <= m; ++parts) {
    std::vector<int> cur;
    compositions_into(m, parts, cur, comps[parts]);
  }
  std::vector<std::vector<int>> out;
  for (int len = 2; len <= 2 * m; ++len) {
    const int odd_slots = (len + 1) / 2, even_slots = len / 2;
    if (odd_slots > m || even_slots > m) continue;
    for (const auto& odd : comps[odd_slots])
      for (const auto& even : comps[even_slots]) {
        std::vector<int> seq(len);
        for (int k = 0; k < odd_slots; ++k) seq[2 * k] = odd[k];
        for (int k = 0; k < even_slots; ++k) seq[2 * k + 1] = even[k];
        out.push_back(std::move(seq));
      }
  }
  return out;
}

void for_each_b_composition(int m, const std::function<void(const CompositionPair&)>& f,
                            bool allow_boundary_zeros) {
  if (m < 1) throw std::invalid_argument("for_each_b_composition: need m >= 1");
  auto seqs = run_sequences(m);
  std::vector<std::vector<int>> s_family = seqs, t_family = seqs;
  if (allow_boundary_zeros) {
    for (const auto& s : seqs) {
      auto padded = s;
      padded.push_back(0);  // s_L = 0
      s_family.push_back(std::move(padded));
    }
    for (const auto& t : seqs) {
      std::vector<int> padded;
      padded.push_back(0);  // t_1 = 0
      padded.insert(padded.end(), t.begin(), t.end());
      t_family.push_back(std::move(padded));
    }
  }
  for (const auto& s : s_family)
    for (const auto& t : t_family) {
      if (t.size() != s.size() && t.size() != s.size() + 1) continue;
      f(CompositionPair{s, t});
    }
}

BMaxResult b_max_critical(int m, int threads) {
  auto seqs = run_sequences(m);
  // sequences grouped by length for the L-compatibility lookup
  std::vector<std::vector<size_t>> by_len(2 * m + 2);
  for (size_t i = 0; i < seqs.size(); ++i) by_len[seqs[i].size()].push_back(i);

  struct Best {
    long long value = -1;
    size_t s_idx = 0, t_idx = 0;
    long long examined = 0;
  };
  std::vector<Best> partial(seqs.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(std::max(1, threads))
#endif
  for (std::int64_t si = 0; si < static_cast<std::int64_t>(seqs.size()); ++si) {
    Best local;
    const auto& s = seqs[si];
    for (size_t len : {s.size(), s.size() + 1}) {
      if (len >= by_len.size()) continue;
      for (size_t ti : by_len[len]) {
        long long v = b_critical_size({s, seqs[ti]});
        ++local.examined;
        if (v > local.value) {
          local.value = v;
          local.s_idx = si;
          local.t_idx = ti;
        }
      }
    }
    partial[si] = local;
  }

  BMaxResult out;
  long long best = -1;
  size_t bs = 0, bt = 0;
  for (const auto& p : partial) {
    out.examined += p.examined;
    if (p.value > best) {
      best = p.value;
      bs = p.s_idx;
      bt = p.t_idx;
    }
  }
  out.best = best;
  out.argmax = CompositionPair{seqs[bs], seqs[bt]};
  return out;
}

CertifiedCriticalSet realize_b_composition(int m, const CompositionPair& c) {
  const int n = 2 * m;
  const int L = static_cast<int>(c.s.size());
  const int Lp = static_cast<int>(c.t.size());
  if (Lp != L && Lp != L + 1)
    throw std::invalid_argument("realize_b_composition: need L' in {L, L+1}");
  auto check_sums = [m](const std::vector<int>& v) {
    int odd = 0, even = 0;
    for (size_t k = 0; k < v.size(); ++k) {
      if (v[k] < 1) return false;
      (k % 2 == 0 ? odd : even) += v[k];
    }
    return odd == m && even == m;
  };
  if (!check_sums(c.s) || !check_sums(c.t))
    throw std::invalid_argument("realize_b_composition: constraints (1)-(4) violated");

  // rows of run i take type (i-1) mod 2; type-0 rows of B are 1..m
  auto order_from_runs = [m, n](const std::vector<int>& runs) {
    int next0 = 1, next1 = m + 1;
    std::vector<int> order;
    order.reserve(n);
    for (size_t k = 0; k < runs.size(); ++k)
      for (int q = 0; q < runs[k]; ++q) order.push_back(k % 2 == 0 ? next0++ : next1++);
    return order;
  };
  auto perm_from_order = [n](const std::vector<int>& order) {
    Perm perm(n);
    for (int pos = 1; pos <= n; ++pos) perm[order[pos - 1] - 1] = pos;
    return perm;
  };
  Perm row_perm = perm_from_order(order_from_runs(c.s));
  Perm col_perm = perm_from_order(order_from_runs(c.t));

  std::vector<int> depth;
  depth.reserve(n);
  int boundary = 0;
  for (int j = 0; j < Lp; ++j) {
    for (int q = 0; q < c.t[j]; ++q) depth.push_back(boundary);
    if (j < L) boundary += c.s[j];
  }
  WalkCertificate cert{std::move(row_perm), std::move(col_perm), Walk(n, std::move(depth))};
  return certify(build_b(m), std::move(cert), static_cast<int>(b_critical_size(c)));
}

}  // namespace critset
