#pragma once

// South-East walks, their corner/block structure, and the walk
// characterizations of defining sets and critical sets.
//
// A walk is encoded by its column depths: depth(j) is the number of rows
// lying above the walk in column j (nondecreasing, between 0 and rows).
// Cell (i,j) lies above the walk iff i <= depth(j).  This bijects with the
// monotone lattice paths of `cols` East and `rows` South steps from the
// top-left corner to the bottom-right corner.

#include <optional>
#include <utility>
#include <vector>

#include "critset/matrix.hpp"

namespace critset {

class Walk {
 public:
  Walk() = default;  // placeholder; real walks come from the other constructors
  Walk(int rows, std::vector<int> depth);
  // Plane points w_0=(0,0) .. w_{rows+cols}=(cols,-rows), steps East
  // (+1,0) or South (0,-1).
  static Walk from_points(int rows, int cols, const std::vector<std::pair<int, int>>& points);

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(depth_.size()); }
  int depth(int j) const { return depth_[j - 1]; }
  const std::vector<int>& depths() const { return depth_; }
  bool above(int i, int j) const { return i <= depth(j); }
  bool starts_east() const { return depth_.front() == 0; }
  std::vector<std::pair<int, int>> points() const;

  auto operator<=>(const Walk&) const = default;

 private:
  int rows_ = 0;
  std::vector<int> depth_;
};

// The walk on the transposed grid whose above-cells are exactly the
// transposes of this walk's below-cells (the swap-values-and-transpose
// normalization).
Walk transpose_walk(const Walk& w);

// Corner/run/block partition of a walk starting with an East step.
// Row runs s_1..s_L and column runs t_1..t_{L'} with L' in {L, L+1};
// block (i,j) is the s_i x t_j cell rectangle, diagonal blocks border the
// walk from below and superdiagonal blocks from above.
struct BlockStructure {
  int rows = 0;
  int cols = 0;
  std::vector<int> row_runs;
  std::vector<int> col_runs;
  std::vector<int> run_depth;  // walk depth over column run j

  int L() const { return static_cast<int>(row_runs.size()); }
  int Lp() const { return static_cast<int>(col_runs.size()); }
  std::pair<int, int> row_range(int i) const;  // 1-based inclusive
  std::pair<int, int> col_range(int j) const;
  long long block_size(int i, int j) const;
  std::vector<std::pair<int, int>> corners() const;  // P_0..P_last as plane points
};

BlockStructure block_structure(const Walk& w);

struct WalkCertificate {
  Perm row_perm;
  Perm col_perm;
  Walk walk;
};

// Zeros strictly below W plus Ones above W (flipped: Ones below plus Zeros
// above), read in permuted coordinates and returned in original
// coordinates.  By the walk characterization this is a defining set of m.
PartialMatrix induced_defining_set(const PartialMatrix& m, const Perm& row_perm,
                                   const Perm& col_perm, const Walk& w, bool flipped = false);
PartialMatrix induced_defining_set(const PartialMatrix& m, const WalkCertificate& cert,
                                   bool flipped = false);

// True iff every diagonal block is all-One and every superdiagonal block
// is all-Zero in the permuted matrix; the induced set is then a critical
// set.  Walks starting with a South step are normalized internally.
bool verify_block_conditions(const PartialMatrix& m, const Perm& row_perm, const Perm& col_perm,
                    const Walk& w);
bool verify_block_conditions(const PartialMatrix& m, const WalkCertificate& cert);

// The unique walk W' with block L_{i,j} below W' exactly when i > j.
Walk complement_walk(const BlockStructure& b);

// A certificate whose induced set is contained in d (equal to d whenever d
// is critical); exists iff d is a defining set of m.  Deterministic:
// lexicographically least row order, then minimal depths.  Desk scale
// (max dimension 8).
std::optional<WalkCertificate> search_walk_certificate(const PartialMatrix& m,
                                                       const PartialMatrix& d);

}  // namespace critset
