#pragma once

// Exhaustive class-level statistics: scs/lcs per matrix via the walk
// characterizations, class enumeration, and scs/lcs/inf/sup reports for
// small classes.

#include <cstdint>

#include "critset/constructions.hpp"

namespace critset {

enum class EnumerationMode { Full, Reduced };

// Every member of the class exactly once, deterministic order (row-major,
// Zero branch first).  Full mode: max dimension 6.  Reduced mode returns
// orbit representatives under row/column permutation, transpose, and (for
// self-complementary classes) 0<->1 complement; max dimension 4.
std::vector<PartialMatrix> enumerate_class(const ClassSpec& spec,
                                           EnumerationMode mode = EnumerationMode::Full,
                                           int threads = 1);

struct ScsResult {
  int size = 0;
  WalkCertificate certificate;
  PartialMatrix set;
};

// Smallest critical set size: minimum of |induced set| over all
// (row order, column order, walk); every defining set contains a
// walk-induced one, and a minimum defining set is critical.  Max dim 8.
ScsResult scs_of(const PartialMatrix& m);

struct LcsResult {
  int size = 0;
  WalkCertificate certificate;
  PartialMatrix set;
};

// Largest critical set size via exhaustive certificate enumeration with
// the block conditions (exact by the critical-set walk characterization).
// Max dimension 4.
LcsResult lcs_of(const PartialMatrix& m);

struct StatWitness {
  PartialMatrix matrix;
  PartialMatrix set;
  int size = 0;
};

struct ExtremalReport {
  ClassSpec spec;
  int scs = 0;  // min over class of scs_of
  int lcs = 0;  // max over class of lcs_of
  int inf = 0;  // max over class of scs_of
  int sup = 0;  // min over class of lcs_of
  long long matrices_examined = 0;
  StatWitness scs_witness, lcs_witness, inf_witness, sup_witness;
};

// Exact report; max dimension 4.
ExtremalReport class_report(const ClassSpec& spec, int threads = 1);

struct SpotReport {
  ClassSpec spec;
  int sample = 0;
  std::uint64_t seed = 0;
  int min_scs = 0;
  int max_scs = 0;
  StatWitness min_witness, max_witness;
};

// Seeded-random spot check of scs over larger classes (max dimension 6).
SpotReport class_scs_spot(const ClassSpec& spec, int sample, std::uint64_t seed,
                          int threads = 1);

// Seeded-random member of the class (randomized branch order, first
// completion found).
PartialMatrix random_member(const ClassSpec& spec, std::uint64_t seed);

}  // namespace critset
