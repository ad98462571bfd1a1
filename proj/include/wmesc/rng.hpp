#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "wmesc/check.hpp"

namespace wmesc {

// Deterministic randomness kit. Everything seeded flows through SeededRng,
// which pins the exact algorithms (not just the seed) so suites reproduce
// bit-for-bit anywhere:
//   - raw stream: std::mt19937_64 seeded directly with the 64-bit seed
//   - bounded(b): top-tail rejection, then r % b
//   - next_double(): top 53 bits of a draw scaled by 2^-53, in [0, 1)
//   - shuffle: Fisher-Yates from the last index down
// Library distributions (std::uniform_*_distribution) are avoided on
// purpose: the standard leaves their algorithms unspecified.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t u64() { return engine_(); }

  // Uniform integer in [0, bound).
  std::uint64_t bounded(std::uint64_t bound) {
    WMESC_ASSERT(bound > 0);
    const std::uint64_t tail = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = u64();
      if (tail == 0 || r < 0 - tail) return r % bound;
    }
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(u64() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Mixing step used to derive independent child seeds from a master seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// FNV-1a, for pinning generated artifacts in tests by digest.
constexpr std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace wmesc
