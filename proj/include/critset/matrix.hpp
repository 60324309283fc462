#pragma once

// Partial (0,1)-matrices with prescribed row and column sums.
//
// A PartialMatrix is a rows x cols grid over {Zero, One, Empty} together
// with its target margins.  It is a member of A'(R,S) when the four
// counting conditions hold (at most r_i ones / cols-r_i zeros per row,
// at most s_j ones / rows-s_j zeros per column), and a member of A(R,S)
// when additionally no cell is empty.  All coordinates are 1-based.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace critset {

enum class Entry : std::uint8_t { Zero = 0, One = 1, Empty = 2 };

inline Entry entry_of(int v) { return v ? Entry::One : Entry::Zero; }

inline Entry flipped(Entry e) {
  if (e == Entry::Empty) return e;
  return e == Entry::Zero ? Entry::One : Entry::Zero;
}

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

struct Triple {
  int row = 0;
  int col = 0;
  int value = 0;  // 0 or 1
  auto operator<=>(const Triple&) const = default;
};

struct Margins {
  std::vector<int> row_sums;
  std::vector<int> col_sums;

  static Margins uniform(int n, int x);
  // sums agree, 0 <= r_i <= cols and 0 <= s_j <= rows
  bool consistent() const;
  auto operator<=>(const Margins&) const = default;
};

// Thrown when a desk-scale size guard is exceeded.
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class PartialMatrix {
 public:
  PartialMatrix() = default;
  PartialMatrix(int rows, int cols, Margins margins);
  static PartialMatrix empty_uniform(int n, int x);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Margins& margins() const { return margins_; }

  Entry at(int i, int j) const { return cells_[index(i, j)]; }
  void set(int i, int j, Entry v);
  bool filled(int i, int j) const { return at(i, j) != Entry::Empty; }

  // number of non-empty cells, the size of the set-of-triples view
  int size() const { return filled_; }

  std::vector<Triple> triples() const;      // row-major
  std::vector<Cell> empty_cells() const;    // row-major

  auto operator<=>(const PartialMatrix&) const = default;

 private:
  int index(int i, int j) const;
  int rows_ = 0;
  int cols_ = 0;
  Margins margins_;
  std::vector<Entry> cells_;
  int filled_ = 0;
};

// The four A'(R,S) counting conditions.
bool validate(const PartialMatrix& m);

// No empty cell and every line meets its margin exactly.
bool is_complete(const PartialMatrix& m);

// Set-of-triples containment; requires equal shape and margins.
bool subset_of(const PartialMatrix& d, const PartialMatrix& m);

// Cells of m with the cells of d blanked out (requires d subset of m).
PartialMatrix difference(const PartialMatrix& m, const PartialMatrix& d);

// Partial matrix holding exactly the given cells of m.
PartialMatrix restrict_to(const PartialMatrix& m, const std::vector<Cell>& cells);

// Permutations are 1-based: perm[i-1] is the image of line i.
using Perm = std::vector<int>;
Perm identity_perm(int n);
Perm inverse_perm(const Perm& p);
bool is_permutation(const Perm& p);

// Output cell (row_perm(i), col_perm(j)) = input cell (i, j).
PartialMatrix permute(const PartialMatrix& m, const Perm& row_perm, const Perm& col_perm);
PartialMatrix transpose(const PartialMatrix& m);
// 0 <-> 1 on filled cells; margins become the complementary sums.
PartialMatrix complement(const PartialMatrix& m);

// Text form: one header line "R=a,b,... S=c,d,...", then one line per row
// over {0,1,.}.  parse_text(to_text(m)) == m; to_text(parse_text(s)) is the
// canonical spelling of s.
std::string to_text(const PartialMatrix& m);
PartialMatrix parse_text(const std::string& text);

// Uniform class Lambda_n^x, or general margins.
struct ClassSpec {
  int n = 0;
  int x = 0;
  std::vector<int> general_row_sums;  // non-empty => general class
  std::vector<int> general_col_sums;

  static ClassSpec uniform(int n, int x) { return ClassSpec{n, x, {}, {}}; }
  static ClassSpec general(Margins m);
  bool is_uniform() const { return general_row_sums.empty(); }
  Margins margins() const;
  std::string label() const;
};

}  // namespace critset
