#pragma once

#include <vector>

#include "wmesc/instance.hpp"
#include "wmesc/reduction.hpp"

namespace wmesc {

// Exhaustive reference solvers. Both enumerate every subset of the family
// by increasing bitmask, so results are reproducible; both are the ground
// truth the fast path is tested against, never the fast path itself.

// Minimum-weight mutually exclusive cover by trying all 2^m subsets.
// Ties on weight go to the lexicographically smallest index list. Guarded
// to m <= 24 (throws CapacityError beyond).
Outcome brute_force(const Instance& inst);

struct PackingResult {
  int size = 0;
  std::vector<int> witness;  // ascending; lexicographically smallest maximum
};

// Maximum set packing by trying all 2^m sub-collections. Guarded to
// m <= 20.
PackingResult brute_force_packing(const PackingInstance& pack);

}  // namespace wmesc
