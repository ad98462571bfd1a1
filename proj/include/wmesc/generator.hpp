#pragma once

#include <cstdint>
#include <vector>

#include "wmesc/instance.hpp"

namespace wmesc {

// Recipe for a seeded instance. Generation is a pure function of this
// struct: same spec, same bytes.
struct GenSpec {
  enum class Mode { Random, Planted };

  int n = 0;
  int m = 0;
  double density = 0.5;  // per-element membership probability, in (0, 1]
  std::uint64_t seed = 0;
  Mode mode = Mode::Random;
  // Planted mode only; blocks + distractors must equal m.
  int blocks = 0;
  int distractors = 0;
};

// Independent density-p membership per element, per set; empty draws are
// redone so no set is empty; weights uniform in [0, 1). Duplicates may
// occur and are left in (normalization is the caller's business). Throws
// std::invalid_argument on a bad spec, CapacityError over the limits.
Instance gen_random(const GenSpec& spec);

struct Planted {
  Instance instance;
  std::vector<int> planted;  // ascending positions of the partition blocks
};

// Hides a random partition of the ground set among distractors. The
// partition blocks get weights drawn from [0, 0.5) and rescaled to sum to
// 0.99; distractors are density-p sets weighted in [1.0, 2.0). Any cover
// touching a distractor therefore outweighs the whole partition, so the
// planted positions are the unique optimum. Set order is shuffled.
Planted gen_planted(const GenSpec& spec);

}  // namespace wmesc
