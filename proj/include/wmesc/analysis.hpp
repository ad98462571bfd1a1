#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wmesc/solver.hpp"

namespace wmesc {

// Growth bases for the leaf-count audit: search trees are measured against
// kAuditBase^m and reported relative to kClaimedBase^m, the published
// constant. The worst recurrence (t^5 = t^2 + 2) has its exact root at
// ~1.29803, so the audit threshold of 1.30 leaves a little room over both
// the roots and the published base.
inline constexpr double kClaimedBase = 1.299;
inline constexpr double kAuditBase = 1.30;

// A branching recurrence T(k) <= sum multiplicity * T(k - drop), one term
// per class of child node.
struct BranchingVector {
  struct Term {
    int drop = 1;          // >= 1, sets removed on that child
    int multiplicity = 1;  // >= 1, children of this class
  };
  std::vector<Term> terms;
};

struct RootResult {
  double root = 1.0;
  double residual = 0.0;  // |p(root)| for the defining polynomial
};

// The unique root >= 1 of t^D = sum multiplicity * t^(D - drop), D being
// the largest drop; bisection on [1, 1 + sum of multiplicities], driven to
// residual <= 1e-12. A recurrence with a single unit-multiplicity term has
// root exactly 1.
RootResult characteristic_root(const BranchingVector& bv);

// "2T(k-3)", "T(k-2)+T(k-4)", ... in term order.
std::string vector_to_string(const BranchingVector& bv);

struct RecurrenceEntry {
  int id = 0;  // 1..9
  BranchingVector vector;
  double claimed_bound = 0.0;  // published constant for this recurrence
};

// The nine recurrences behind the solver's branch analysis, ids 1..9, each
// with the growth constant claimed for it.
std::vector<RecurrenceEntry> branching_recurrence_table();

struct LeafAudit {
  std::uint64_t leaves = 0;  // terminal nodes, pruned ones excluded
  double bound = 0.0;        // kAuditBase^m
  double ratio = 0.0;        // leaves / kClaimedBase^m
  bool pass = false;         // leaves <= bound
};

// Checks a search's leaf count against the growth bound for a family of m
// sets. Meaningful for stats collected with pruning disabled (pruning only
// shrinks the tree, so a pass there is not evidence about the full tree).
LeafAudit audit_leaf_bound(const SearchStats& stats, int m);

}  // namespace wmesc
