#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "wmesc/check.hpp"

namespace wmesc {

// Fixed-capacity bit collection. The capacity is chosen at construction
// (one word per 64 bits) and all binary operations require equal capacity.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {
    WMESC_ASSERT(nbits >= 0);
  }

  static Bitset of(int nbits, std::initializer_list<int> bits) {
    Bitset b(nbits);
    for (int i : bits) b.set(i);
    return b;
  }

  int capacity() const { return nbits_; }

  void set(int i) {
    WMESC_ASSERT(i >= 0 && i < nbits_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    WMESC_ASSERT(i >= 0 && i < nbits_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool test(int i) const {
    WMESC_ASSERT(i >= 0 && i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  void set_first(int k) {  // set bits 0..k-1
    WMESC_ASSERT(k >= 0 && k <= nbits_);
    for (int i = 0; i < k; ++i) set(i);
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    WMESC_ASSERT(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    WMESC_ASSERT(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  int intersection_count(const Bitset& o) const {
    WMESC_ASSERT(nbits_ == o.nbits_);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  int difference_count(const Bitset& o) const {  // |this - o|
    WMESC_ASSERT(nbits_ == o.nbits_);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & ~o.words_[i]);
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    WMESC_ASSERT(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    WMESC_ASSERT(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {  // this &= ~o
    WMESC_ASSERT(nbits_ == o.nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  Bitset difference(const Bitset& o) const {
    Bitset r = *this;
    r.subtract(o);
    return r;
  }

  // First set bit at index >= from, or -1.
  int find_next(int from) const {
    if (from >= nbits_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }
  int find_first() const { return find_next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(static_cast<int>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  bool operator==(const Bitset& o) const = default;

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace wmesc
