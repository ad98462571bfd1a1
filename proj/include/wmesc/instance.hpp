#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "wmesc/bitset.hpp"

namespace wmesc {

// Capacity limits enforced at parse time. Bitsets over these ranges keep
// memory predictable; the solver is practical far below them anyway.
inline constexpr int kMaxElements = 4096;
inline constexpr int kMaxSets = 4096;

// A weighted instance: ground elements 0..n-1, m element-subsets with
// index-aligned nonnegative finite weights. Immutable after construction.
struct Instance {
  int n = 0;
  std::vector<Bitset> sets;      // each of capacity n
  std::vector<double> weights;   // same length as sets

  int m() const { return static_cast<int>(sets.size()); }
  bool operator==(const Instance&) const = default;
};

// Result of a solve: either a minimum-weight mutually exclusive cover
// (sorted set indices plus their total weight) or proof that none exists.
struct Outcome {
  enum class Kind { Cover, NoSolution };
  Kind kind = Kind::NoSolution;
  std::vector<int> chosen;  // ascending indices; empty for NoSolution
  double weight = 0.0;      // meaningful only for Cover

  static Outcome cover(std::vector<int> chosen, double weight) {
    return Outcome{Kind::Cover, std::move(chosen), weight};
  }
  static Outcome no_solution() { return Outcome{}; }
  bool is_cover() const { return kind == Kind::Cover; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads the line-oriented instance format:
//   # comment (anywhere)
//   p wmesc <n> <m>
//   s <weight> <e1> ... <ek>        (exactly m lines, distinct ids < n)
// Returns a validated, not-yet-normalized instance; set order and element
// ids are preserved. Malformed input throws ParseError with the offending
// line number.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);

// Canonical text form: header, then one `s` line per set with elements in
// ascending order and weights printed shortest-round-trip. Parsing the
// result reproduces the instance exactly.
std::string serialize_instance(const Instance& inst);

struct Normalized {
  Instance instance;
  std::vector<int> index_map;  // new set index -> original set index
};

// Drops empty sets and collapses duplicate contents to the single copy of
// minimum weight (ties: lowest original index). Optimal cover weight is
// unchanged. Idempotent.
Normalized normalize(const Instance& inst);

// True iff the chosen sets are pairwise disjoint and their union is exactly
// {0..n-1}. Indices must be in range and not repeated.
bool verify_cover(const Instance& inst, const std::vector<int>& chosen);

// Total weight of the given sets, summed in ascending index order. Every
// weight total that is compared or reported goes through this so results
// are deterministic and reproducible across routes.
double cover_weight(const Instance& inst, std::vector<int> chosen);

// Translates an outcome on a normalized instance back to the original
// instance via normalize's index map; the weight is re-summed over the
// original indices in ascending order.
Outcome map_outcome(const Outcome& out, const Instance& original,
                    const std::vector<int>& index_map);

}  // namespace wmesc
