#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "wmesc/incidence.hpp"
#include "wmesc/instance.hpp"

namespace wmesc {

// The six ways a node advances the search, in dispatch order: forced single
// neighbor, forced partner-equal set, the two-way branch on a degree-2
// element, the paired include/exclude move when some partner has exactly
// one outside set (split by whether neighbor(x) sticks out of neighbor(y)),
// and the generic include/exclude branch.
enum class BranchKind {
  Unary = 0,
  Forced,
  TwoBranch,
  Out1Pair,
  Out1Full,
  Generic,
};
inline constexpr int kBranchKinds = 6;
const char* branch_kind_name(BranchKind k);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;         // cover, dead-end, or pruned terminals
  std::uint64_t pruned_leaves = 0;  // subset of leaves
  std::uint64_t max_depth = 0;
  std::array<std::uint64_t, kBranchKinds> branch_histogram{};

  bool operator==(const SearchStats&) const = default;
};

struct SolveOptions {
  bool prune = true;  // cut nodes whose partial weight already ties or
                      // exceeds the incumbent
};

struct SolveResult {
  Outcome outcome;
  SearchStats stats;
};

// Mutable search state over a normalized instance: the active view, the
// chosen partial solution, and its accumulated weight. select/exclude
// return a token that rolls everything back exactly.
class SolveState {
 public:
  explicit SolveState(const Instance& inst);

  struct Token {
    ActiveView::Mark mark;
    std::size_t partial_size;
    double partial_weight;
  };

  // Commits set s: appends it to the partial solution, removes its elements
  // and every active set intersecting it (including s itself).
  Token select_set(int s);

  // Bans the given active sets without touching the element side.
  Token exclude_sets(std::span<const int> sets);

  void rollback(const Token& t);

  const ActiveView& view() const { return view_; }
  ActiveView& view() { return view_; }
  const Instance& instance() const { return *inst_; }
  const std::vector<int>& partial() const { return partial_; }
  double partial_weight() const { return partial_weight_; }
  // Partial weight re-summed in ascending chosen-index order; the value
  // used for every optimality comparison.
  double partial_weight_ascending() const;

 private:
  const Instance* inst_;
  ActiveView view_;
  std::vector<int> partial_;         // selection order
  std::vector<int> partial_sorted_;  // ascending
  double partial_weight_ = 0.0;
};

// Exact branch-and-reduce search for a minimum-weight mutually exclusive
// cover. Requires a normalized instance (no empty or duplicate sets);
// returns chosen indices of that instance. Deterministic: all ties break
// to the lowest id.
SolveResult solve(const Instance& inst, const SolveOptions& options = {});

// Formats the histogram as "unary:0,forced:1,...".
std::string histogram_to_string(const SearchStats& stats);

}  // namespace wmesc
