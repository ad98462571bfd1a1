#include "wmesc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace wmesc {

namespace {

constexpr int kBruteForceCoverLimit = 24;
constexpr int kBruteForcePackingLimit = 20;

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Outcome brute_force(const Instance& inst) {
  const int m = inst.m();
  if (m > kBruteForceCoverLimit)
    throw CapacityError("brute_force handles at most " +
                        std::to_string(kBruteForceCoverLimit) + " sets, got " +
                        std::to_string(m));
  Bitset full(inst.n);
  full.set_first(inst.n);

  bool have = false;
  double best_weight = 0.0;
  std::vector<int> best;
  std::vector<int> chosen;
  Bitset acc(inst.n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    acc.clear();
    chosen.clear();
    bool disjoint = true;
    for (int s = 0; s < m; ++s) {
      if (!(mask >> s & 1)) continue;
      if (acc.intersects(inst.sets[s])) {
        disjoint = false;
        break;
      }
      acc |= inst.sets[s];
      chosen.push_back(s);
    }
    if (!disjoint || !(acc == full)) continue;
    double w = 0.0;
    for (int s : chosen) w += inst.weights[s];  // ascending index order
    if (!have || w < best_weight ||
        (w == best_weight && lex_less(chosen, best))) {
      have = true;
      best_weight = w;
      best = chosen;
    }
  }
  return have ? Outcome::cover(std::move(best), best_weight)
              : Outcome::no_solution();
}

PackingResult brute_force_packing(const PackingInstance& pack) {
  const int m = pack.m();
  if (m > kBruteForcePackingLimit)
    throw CapacityError("brute_force_packing handles at most " +
                        std::to_string(kBruteForcePackingLimit) +
                        " sets, got " + std::to_string(m));
  PackingResult best;
  bool have = false;
  std::vector<int> chosen;
  Bitset acc(pack.n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    acc.clear();
    chosen.clear();
    bool disjoint = true;
    for (int s = 0; s < m; ++s) {
      if (!(mask >> s & 1)) continue;
      if (acc.intersects(pack.sets[s])) {
        disjoint = false;
        break;
      }
      acc |= pack.sets[s];
      chosen.push_back(s);
    }
    if (!disjoint) continue;
    const int size = static_cast<int>(chosen.size());
    if (!have || size > best.size ||
        (size == best.size && lex_less(chosen, best.witness))) {
      have = true;
      best.size = size;
      best.witness = chosen;
    }
  }
  return best;  // mask 0 always qualifies, so `best` is always set
}

}  // namespace wmesc
