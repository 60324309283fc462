#include "critset/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace critset {

Margins Margins::uniform(int n, int x) {
  Margins m;
  m.row_sums.assign(n, x);
  m.col_sums.assign(n, x);
  return m;
}

bool Margins::consistent() const {
  const int rows = static_cast<int>(row_sums.size());
  const int cols = static_cast<int>(col_sums.size());
  long long total_r = 0, total_s = 0;
  for (int r : row_sums) {
    if (r < 0 || r > cols) return false;
    total_r += r;
  }
  for (int s : col_sums) {
    if (s < 0 || s > rows) return false;
    total_s += s;
  }
  return total_r == total_s;
}

PartialMatrix::PartialMatrix(int rows, int cols, Margins margins)
    : rows_(rows), cols_(cols), margins_(std::move(margins)) {
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("PartialMatrix: non-positive dimensions");
  if (static_cast<int>(margins_.row_sums.size()) != rows ||
      static_cast<int>(margins_.col_sums.size()) != cols)
    throw std::invalid_argument("PartialMatrix: margin lengths do not match grid");
  if (!margins_.consistent())
    throw std::invalid_argument("PartialMatrix: inconsistent margins");
  cells_.assign(static_cast<size_t>(rows) * cols, Entry::Empty);
}

PartialMatrix PartialMatrix::empty_uniform(int n, int x) {
  return PartialMatrix(n, n, Margins::uniform(n, x));
}

int PartialMatrix::index(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_)
    throw std::out_of_range("PartialMatrix: cell (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
  return (i - 1) * cols_ + (j - 1);
}

void PartialMatrix::set(int i, int j, Entry v) {
  Entry& slot = cells_[index(i, j)];
  filled_ += (v != Entry::Empty) - (slot != Entry::Empty);
  slot = v;
}

std::vector<Triple> PartialMatrix::triples() const {
  std::vector<Triple> out;
  out.reserve(filled_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) {
      Entry e = at(i, j);
      if (e != Entry::Empty) out.push_back({i, j, e == Entry::One ? 1 : 0});
    }
  return out;
}

std::vector<Cell> PartialMatrix::empty_cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j)
      if (!filled(i, j)) out.push_back({i, j});
  return out;
}

bool validate(const PartialMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  for (int i = 1; i <= rows; ++i) {
    int ones = 0, zeros = 0;
    for (int j = 1; j <= cols; ++j) {
      Entry e = m.at(i, j);
      ones += e == Entry::One;
      zeros += e == Entry::Zero;
    }
    int r = m.margins().row_sums[i - 1];
    if (ones > r || zeros > cols - r) return false;
  }
  for (int j = 1; j <= cols; ++j) {
    int ones = 0, zeros = 0;
    for (int i = 1; i <= rows; ++i) {
      Entry e = m.at(i, j);
      ones += e == Entry::One;
      zeros += e == Entry::Zero;
    }
    int s = m.margins().col_sums[j - 1];
    if (ones > s || zeros > rows - s) return false;
  }
  return true;
}

bool is_complete(const PartialMatrix& m) {
  if (m.size() != m.rows() * m.cols()) return false;
  for (int i = 1; i <= m.rows(); ++i) {
    int ones = 0;
    for (int j = 1; j <= m.cols(); ++j) ones += m.at(i, j) == Entry::One;
    if (ones != m.margins().row_sums[i - 1]) return false;
  }
  for (int j = 1; j <= m.cols(); ++j) {
    int ones = 0;
    for (int i = 1; i <= m.rows(); ++i) ones += m.at(i, j) == Entry::One;
    if (ones != m.margins().col_sums[j - 1]) return false;
  }
  return true;
}

static void require_same_shape(const PartialMatrix& a, const PartialMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.margins() == b.margins()))
    throw std::invalid_argument("matrices have different shape or margins");
}

bool subset_of(const PartialMatrix& d, const PartialMatrix& m) {
  require_same_shape(d, m);
  for (int i = 1; i <= d.rows(); ++i)
    for (int j = 1; j <= d.cols(); ++j) {
      Entry e = d.at(i, j);
      if (e != Entry::Empty && e != m.at(i, j)) return false;
    }
  return true;
}

PartialMatrix difference(const PartialMatrix& m, const PartialMatrix& d) {
  if (!subset_of(d, m)) throw std::invalid_argument("difference: d is not a subset of m");
  PartialMatrix out = m;
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      if (d.filled(i, j)) out.set(i, j, Entry::Empty);
  return out;
}

PartialMatrix restrict_to(const PartialMatrix& m, const std::vector<Cell>& cells) {
  PartialMatrix out(m.rows(), m.cols(), m.margins());
  for (const Cell& c : cells) {
    Entry e = m.at(c.row, c.col);
    if (e == Entry::Empty)
      throw std::invalid_argument("restrict_to: cell is empty in source");
    out.set(c.row, c.col, e);
  }
  return out;
}

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

Perm inverse_perm(const Perm& p) {
  if (!is_permutation(p)) throw std::invalid_argument("inverse_perm: not a permutation");
  Perm inv(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) inv[p[i] - 1] = i + 1;
  return inv;
}

PartialMatrix permute(const PartialMatrix& m, const Perm& row_perm, const Perm& col_perm) {
  if (static_cast<int>(row_perm.size()) != m.rows() ||
      static_cast<int>(col_perm.size()) != m.cols() || !is_permutation(row_perm) ||
      !is_permutation(col_perm))
    throw std::invalid_argument("permute: invalid permutation");
  Margins margins;
  margins.row_sums.resize(m.rows());
  margins.col_sums.resize(m.cols());
  for (int i = 1; i <= m.rows(); ++i)
    margins.row_sums[row_perm[i - 1] - 1] = m.margins().row_sums[i - 1];
  for (int j = 1; j <= m.cols(); ++j)
    margins.col_sums[col_perm[j - 1] - 1] = m.margins().col_sums[j - 1];
  PartialMatrix out(m.rows(), m.cols(), margins);
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      out.set(row_perm[i - 1], col_perm[j - 1], m.at(i, j));
  return out;
}

PartialMatrix transpose(const PartialMatrix& m) {
  Margins margins{m.margins().col_sums, m.margins().row_sums};
  PartialMatrix out(m.cols(), m.rows(), margins);
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) out.set(j, i, m.at(i, j));
  return out;
}

PartialMatrix complement(const PartialMatrix& m) {
  Margins margins = m.margins();
  for (int& r : margins.row_sums) r = m.cols() - r;
  for (int& s : margins.col_sums) s = m.rows() - s;
  PartialMatrix out(m.rows(), m.cols(), margins);
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) out.set(i, j, flipped(m.at(i, j)));
  return out;
}

static std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string to_text(const PartialMatrix& m) {
  std::string out = "R=" + join_ints(m.margins().row_sums) +
                    " S=" + join_ints(m.margins().col_sums) + "\n";
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) {
      Entry e = m.at(i, j);
      out += e == Entry::Empty ? '.' : (e == Entry::One ? '1' : '0');
    }
    out += '\n';
  }
  return out;
}

static std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "' in " + what);
    }
  }
  if (out.empty()) throw ParseError("empty integer list in " + what);
  return out;
}

PartialMatrix parse_text(const std::string& text) {
  std::stringstream ss(text);
  std::string header;
  if (!std::getline(ss, header)) throw ParseError("missing header line");
  if (header.rfind("R=", 0) != 0) throw ParseError("header must start with R=");
  size_t s_pos = header.find(" S=");
  if (s_pos == std::string::npos) throw ParseError("header missing S= part");
  Margins margins;
  margins.row_sums = parse_int_list(header.substr(2, s_pos - 2), "row sums");
  margins.col_sums = parse_int_list(header.substr(s_pos + 3), "column sums");

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    lines.push_back(line);
  }
  const int rows = static_cast<int>(margins.row_sums.size());
  const int cols = static_cast<int>(margins.col_sums.size());
  if (static_cast<int>(lines.size()) != rows)
    throw ParseError("expected " + std::to_string(rows) + " rows, got " +
                     std::to_string(lines.size()));
  if (!margins.consistent()) throw ParseError("inconsistent margins in header");
  PartialMatrix m(rows, cols, margins);
  for (int i = 1; i <= rows; ++i) {
    if (static_cast<int>(lines[i - 1].size()) != cols)
      throw ParseError("row " + std::to_string(i) + " has wrong length");
    for (int j = 1; j <= cols; ++j) {
      char c = lines[i - 1][j - 1];
      if (c == '.')
        continue;
      else if (c == '0')
        m.set(i, j, Entry::Zero);
      else if (c == '1')
        m.set(i, j, Entry::One);
      else
        throw ParseError(std::string("bad character '") + c + "' in row " + std::to_string(i));
    }
  }
  return m;
}

ClassSpec ClassSpec::general(Margins m) {
  ClassSpec spec;
  spec.n = static_cast<int>(m.row_sums.size());
  spec.general_row_sums = std::move(m.row_sums);
  spec.general_col_sums = std::move(m.col_sums);
  return spec;
}

Margins ClassSpec::margins() const {
  if (is_uniform()) {
    if (x < 0 || x > n) throw std::invalid_argument("ClassSpec: need 0 <= x <= n");
    return Margins::uniform(n, x);
  }
  return Margins{general_row_sums, general_col_sums};
}

std::string ClassSpec::label() const {
  if (is_uniform())
    return "Lambda(" + std::to_string(n) + "," + std::to_string(x) + ")";
  return "A(R,S) " + std::to_string(general_row_sums.size()) + "x" +
         std::to_string(general_col_sums.size());
}

}  // namespace critset
