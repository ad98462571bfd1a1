#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wmesc/bitset.hpp"
#include "wmesc/instance.hpp"

namespace wmesc {

// A maximum set packing input: find the largest pairwise-disjoint
// sub-collection of `sets`. Ground elements are 0..n-1 and every one of
// them occurs in at least one set (the parser guarantees this by dropping
// unused ids).
struct PackingInstance {
  int n = 0;
  std::vector<Bitset> sets;

  int m() const { return static_cast<int>(sets.size()); }
};

struct ParsedPacking {
  PackingInstance pack;
  std::vector<int> element_map;  // compacted element id -> id in the file
};

// Packing text format: comments with '#', one header 'p pack <n> <m>', then
// m lines 's <e1> ... <ek>' with distinct ids in 0..n-1. Throws ParseError
// with a line number on malformed input.
ParsedPacking parse_packing(std::istream& in);
ParsedPacking parse_packing_text(const std::string& text);

// The cover instance a packing maps to. Ground set is X' plus one block of
// n+1 tag elements per packing set; the family is, in order:
//   [0, n)                 singletons {x_i}
//   [n, n+m)               S_i plus its tag block
//   [n+m, n+m+m(n+1))      tag singletons, row-major by (set, tag)
// All weights are 1.0, so minimum weight means fewest sets, and a minimum
// cover keeps as many S_i-blocks as possible — exactly a maximum packing.
struct ReducedInstance {
  Instance wmesc;
  int packing_n = 0;
  int packing_m = 0;
  int f2_begin = 0;  // first S_i-block index in wmesc.sets (== packing_n)

  int f2_end() const { return f2_begin + packing_m; }
  // Original packing-set index of an S_i-block position.
  int packing_index(int set_index) const { return set_index - f2_begin; }
};

// Throws CapacityError when n + m(n+1) elements or n + m + m(n+1) sets
// exceed the instance limits.
ReducedInstance reduce(const PackingInstance& pack);

// The packing-set indices whose blocks appear in a cover of the reduced
// instance (ascending). `out` must be a Cover over reduced.wmesc's original
// indices; reduced instances are always coverable, so solving one never
// yields NoSolution.
std::vector<int> extract_packing(const ReducedInstance& reduced,
                                 const Outcome& out);

// Bookkeeping identity tying a cover's size to how many S_i-blocks it uses:
// with k blocks chosen and n1 ground elements left to the singletons,
//   |cover| = k + (m-k)(n+1) + n1.
bool cover_cost_identity_holds(const ReducedInstance& reduced,
                               const Outcome& out);

}  // namespace wmesc
