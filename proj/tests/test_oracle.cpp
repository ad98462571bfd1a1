#include "wmesc/oracle.hpp"

#include <vector>

#include "doctest.h"
#include "wmesc/instance.hpp"

using namespace wmesc;

TEST_CASE("brute force solves the four-set sample") {
  Instance inst = parse_instance_text(
      "p wmesc 3 4\ns 1.0 0 1\ns 1.0 1 2\ns 0.5 2\ns 0.7 0\n");
  Outcome out = brute_force(inst);
  REQUIRE(out.is_cover());
  CHECK(out.weight == 1.5);
  CHECK(out.chosen == std::vector<int>{0, 2});
}

TEST_CASE("brute force covers an empty ground set with no sets") {
  Instance inst;
  inst.n = 0;
  Outcome out = brute_force(inst);
  REQUIRE(out.is_cover());
  CHECK(out.weight == 0.0);
  CHECK(out.chosen.empty());
}

TEST_CASE("brute force reports no-solution when an element is uncoverable") {
  Instance inst = parse_instance_text("p wmesc 1 0\n");
  Outcome out = brute_force(inst);
  CHECK_FALSE(out.is_cover());
}

TEST_CASE("brute force accepts duplicate and empty sets as given") {
  // Unnormalized input: a zero-weight empty set never helps a cover, and
  // the cheaper duplicate must win.
  Instance inst = parse_instance_text(
      "p wmesc 2 4\ns 0.5 0 1\ns 0.25 0 1\ns 1.0 1\ns 0.0\n");
  Outcome out = brute_force(inst);
  REQUIRE(out.is_cover());
  CHECK(out.weight == 0.25);
  CHECK(out.chosen == std::vector<int>{1});
}

TEST_CASE("equal-weight covers break ties toward the earlier index list") {
  // Both {0,3} and {2,1} cost 1.0; the lexicographically smaller sorted
  // witness [0,3] must be reported.
  Instance inst = parse_instance_text(
      "p wmesc 2 4\ns 0.5 0\ns 0.5 1\ns 0.5 0\ns 0.5 1\n");
  Outcome out = brute_force(inst);
  REQUIRE(out.is_cover());
  CHECK(out.weight == 1.0);
  CHECK(out.chosen == std::vector<int>{0, 1});
}

TEST_CASE("brute force rejects oversized families") {
  Instance inst;
  inst.n = 1;
  for (int i = 0; i < 25; ++i) {
    inst.sets.push_back(Bitset::of(1, {0}));
    inst.weights.push_back(1.0);
  }
  CHECK_THROWS_AS(brute_force(inst), CapacityError);
}

TEST_CASE("packing oracle finds the two disjoint sets") {
  PackingInstance pack;
  pack.n = 3;
  pack.sets = {Bitset::of(3, {0, 1}), Bitset::of(3, {1, 2}),
               Bitset::of(3, {2})};
  PackingResult out = brute_force_packing(pack);
  CHECK(out.size == 2);
  CHECK(out.witness == std::vector<int>{0, 2});
}

TEST_CASE("packing oracle takes everything when sets are disjoint") {
  PackingInstance pack;
  pack.n = 6;
  pack.sets = {Bitset::of(6, {0, 1}), Bitset::of(6, {2}),
               Bitset::of(6, {3, 4, 5})};
  PackingResult out = brute_force_packing(pack);
  CHECK(out.size == 3);
  CHECK(out.witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("packing oracle handles a single set and an empty family") {
  PackingInstance one;
  one.n = 2;
  one.sets = {Bitset::of(2, {0, 1})};
  CHECK(brute_force_packing(one).size == 1);

  PackingInstance none;
  none.n = 2;
  CHECK(brute_force_packing(none).size == 0);
  CHECK(brute_force_packing(none).witness.empty());
}

TEST_CASE("packing oracle prefers the earlier witness among equals") {
  // {0} vs {1} vs {2}: all pairwise intersecting options have size 1, and
  // several index pairs reach the max; the smallest list wins.
  PackingInstance pack;
  pack.n = 2;
  pack.sets = {Bitset::of(2, {0}), Bitset::of(2, {0}), Bitset::of(2, {1}),
               Bitset::of(2, {1})};
  PackingResult out = brute_force_packing(pack);
  CHECK(out.size == 2);
  CHECK(out.witness == std::vector<int>{0, 2});
}

TEST_CASE("packing oracle rejects oversized families") {
  PackingInstance pack;
  pack.n = 1;
  for (int i = 0; i < 21; ++i) pack.sets.push_back(Bitset::of(1, {0}));
  CHECK_THROWS_AS(brute_force_packing(pack), CapacityError);
}

TEST_CASE("empty sets count toward a packing") {
  // Empty sets are disjoint from everything, including each other.
  PackingInstance pack;
  pack.n = 1;
  pack.sets = {Bitset(1), Bitset::of(1, {0}), Bitset(1)};
  PackingResult out = brute_force_packing(pack);
  CHECK(out.size == 3);
  CHECK(out.witness == std::vector<int>{0, 1, 2});
}
