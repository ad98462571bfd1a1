#include "wmesc/generator.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "wmesc/check.hpp"
#include "wmesc/rng.hpp"

namespace wmesc {

namespace {

void check_common(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
  if (spec.m < 0) throw std::invalid_argument("generator needs m >= 0");
  if (!(spec.density > 0.0 && spec.density <= 1.0))
    throw std::invalid_argument("density must be in (0, 1]");
  if (spec.n > kMaxElements)
    throw CapacityError("n " + std::to_string(spec.n) + " exceeds capacity " +
                        std::to_string(kMaxElements));
  if (spec.m > kMaxSets)
    throw CapacityError("m " + std::to_string(spec.m) + " exceeds capacity " +
                        std::to_string(kMaxSets));
}

// Density-p membership over 0..n-1, redrawn until nonempty.
Bitset draw_set(SeededRng& rng, int n, double density) {
  Bitset b(n);
  do {
    b.clear();
    for (int e = 0; e < n; ++e)
      if (rng.next_double() < density) b.set(e);
  } while (b.none());
  return b;
}

}  // namespace

Instance gen_random(const GenSpec& spec) {
  check_common(spec);
  if (spec.mode != GenSpec::Mode::Random)
    throw std::invalid_argument("gen_random wants a random-mode spec");
  SeededRng rng(spec.seed);
  Instance inst;
  inst.n = spec.n;
  inst.sets.reserve(spec.m);
  inst.weights.reserve(spec.m);
  for (int s = 0; s < spec.m; ++s) {
    inst.sets.push_back(draw_set(rng, spec.n, spec.density));
    inst.weights.push_back(rng.next_double());
  }
  return inst;
}

Planted gen_planted(const GenSpec& spec) {
  check_common(spec);
  if (spec.mode != GenSpec::Mode::Planted)
    throw std::invalid_argument("gen_planted wants a planted-mode spec");
  if (spec.blocks < 1 || spec.blocks > spec.n)
    throw std::invalid_argument("blocks must be in [1, n]");
  if (spec.blocks + spec.distractors != spec.m || spec.distractors < 0)
    throw std::invalid_argument("blocks + distractors must equal m");

  SeededRng rng(spec.seed);
  const int n = spec.n;
  const int blocks = spec.blocks;

  // Random partition: a shuffled ground set seeds one element per block,
  // the rest land in uniform blocks.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  std::vector<Bitset> pre_sets(spec.m, Bitset(n));
  for (int b = 0; b < blocks; ++b) pre_sets[b].set(perm[b]);
  for (int i = blocks; i < n; ++i)
    pre_sets[static_cast<int>(rng.bounded(blocks))].set(perm[i]);

  // Block weights from [0, 0.5), rescaled so the planted total is 0.99 and
  // thus beats any cover that pays for even one distractor.
  std::vector<double> pre_weights(spec.m, 0.0);
  double sum = 0.0;
  for (int b = 0; b < blocks; ++b) {
    pre_weights[b] = 0.5 * rng.next_double();
    sum += pre_weights[b];
  }
  for (int b = 0; b < blocks; ++b)
    pre_weights[b] = sum > 0.0 ? pre_weights[b] * (0.99 / sum) : 0.99 / blocks;

  for (int d = blocks; d < spec.m; ++d) {
    pre_sets[d] = draw_set(rng, n, spec.density);
    pre_weights[d] = 1.0 + rng.next_double();
  }

  // Final slot i holds pre-shuffle set order[i].
  std::vector<int> order(spec.m);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  Planted out;
  out.instance.n = n;
  out.instance.sets.reserve(spec.m);
  out.instance.weights.reserve(spec.m);
  for (int i = 0; i < spec.m; ++i) {
    out.instance.sets.push_back(std::move(pre_sets[order[i]]));
    out.instance.weights.push_back(pre_weights[order[i]]);
    if (order[i] < blocks) out.planted.push_back(i);
  }
  WMESC_ASSERT(verify_cover(out.instance, out.planted));
  return out;
}

}  // namespace wmesc
