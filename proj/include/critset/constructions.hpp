#pragma once

// The explicit families: X_{2m} and Y_{2m} with their staircase critical
// sets, M(k) for the lower spectrum, the four-cell trade family T(i,j),
// the full spectrum map, the disjoint critical pair, and B_{2m} with its
// composition-based critical set analysis.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "critset/defsets.hpp"

namespace critset {

// X_{2m}: cell (i,j) is Zero iff (i-j) mod 2m lies in {1,..,m-1, 2m-1}.
PartialMatrix build_x(int m);
// Induced by the walk bordering the main diagonal from above (depth j-1);
// size 3m^2-4m+2.
CertifiedCriticalSet critical_x(int m);

// Y_{2m}: X_{2m} with 0 and 1 swapped in cells (m-1,2m-1), (m-1,2m),
// (2m,2m-1), (2m,2m).  m >= 3.
PartialMatrix build_y(int m);
// Same walk but with cell (2m,2m) above it; size 3m^2-4m+1.
CertifiedCriticalSet critical_y(int m);

// M(k) for m^2 <= k <= m^2+(m-1)^2, with its walk-certified critical set
// of size exactly k (matrix carried inside the certified set).
CertifiedCriticalSet build_m_k(int m, int k);

struct FamilyTrade {
  Cell cell;  // the index (i,j) in I
  Trade trade;
};

// Trades T(i,j) on cells {(i,j),(i-m+1,j),(i,i-j),(i-m+1,i-j)} for
// (i,j) in I = {m < i <= 2m, 1 <= j < m-2, m <= i-j < 2m-1};
// |I| = m(m+1)/2 - 7.  m >= 4.
std::vector<FamilyTrade> trade_family(int m);

// Pure-arithmetic check of the family: the stated cell values in X_{2m},
// one cell (the One at (i-m+1, i-j)) above the diagonal walk and the other
// three below, pairwise disjointness, and |I|.
bool validate_trade_family(int m);

// Critical set of size k obtained by swapping trades for mates in X_{2m}
// (k of the same parity as 3m^2-4m+2) or Y_{2m} (other parity);
// 2m^2-5m+15 <= k <= 3m^2-4m+2, m >= 4.
CertifiedCriticalSet spectrum_upper(int m, int k);

// k -> certified critical set, for every m^2 <= k <= 3m^2-4m+2.
std::map<int, CertifiedCriticalSet> spectrum(int m);

// Disjoint critical pair with |C1| + |C2| >= 3m^2 - 2m + 1, built from the
// row/column-partition construction after normalizing the first line's
// Ones into the leading block.  m = n/2 >= 2.
std::pair<CertifiedCriticalSet, CertifiedCriticalSet> sup_pair(const PartialMatrix& m,
                                                               const SearchOptions& opts = {});

// B_{2m}: cell (i,j) holds One iff floor((i-1)/m) == floor((j-1)/m).
PartialMatrix build_b(int m);

// Row runs s_1..s_L and column runs t_1..t_{L'} of a walk on B_{2m},
// subject to: odd-indexed s sum to m, even-indexed s sum to m, and the
// same for t (each line of B_{2m} holds m Ones and m Zeros).
struct CompositionPair {
  std::vector<int> s;
  std::vector<int> t;
};

// Critical set size determined by the runs alone:
// sum_{i+j odd, i>j} s_i t_j + sum_{i+j even, i<j} s_i t_j.
long long b_critical_size(const CompositionPair& c);

// All constraint-satisfying pairs with positive parts and L' in {L, L+1};
// with allow_boundary_zeros also the s_L = 0 / t_1 = 0 relaxed variants.
void for_each_b_composition(int m, const std::function<void(const CompositionPair&)>& f,
                            bool allow_boundary_zeros = false);

struct BMaxResult {
  long long best = 0;
  CompositionPair argmax;
  long long examined = 0;
};

// Exhaustive maximum of b_critical_size over all composition pairs;
// equals 2m^2 - m.
BMaxResult b_max_critical(int m, int threads = 1);

// Walk-certified critical set of B_{2m} whose block structure realizes the
// given composition pair (rows and columns rearranged so the block types
// alternate).
CertifiedCriticalSet realize_b_composition(int m, const CompositionPair& c);

}  // namespace critset
