#include "wmesc/instance.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "wmesc/bitset.hpp"

using namespace wmesc;

namespace {

// Running example: optimum is sets {0,2} with weight 1.5.
const char* kSampleText =
    "p wmesc 3 4\n"
    "s 1.0 0 1\n"
    "s 1.0 1 2\n"
    "s 0.5 2\n"
    "s 0.7 0\n";

}  // namespace

TEST_CASE("parse reads header, sets, and weights") {
  Instance inst = parse_instance_text(kSampleText);
  CHECK(inst.n == 3);
  CHECK(inst.m() == 4);
  CHECK(inst.sets[0] == Bitset::of(3, {0, 1}));
  CHECK(inst.sets[1] == Bitset::of(3, {1, 2}));
  CHECK(inst.sets[2] == Bitset::of(3, {2}));
  CHECK(inst.sets[3] == Bitset::of(3, {0}));
  CHECK(inst.weights == std::vector<double>{1.0, 1.0, 0.5, 0.7});
}

TEST_CASE("parse tolerates comments, blank lines, and CRLF") {
  Instance inst = parse_instance_text(
      "# header comment\r\n"
      "\n"
      "p wmesc 2 1\r\n"
      "# mid comment\n"
      "s 1.5 0 1\r\n");
  CHECK(inst.n == 2);
  CHECK(inst.m() == 1);
  CHECK(inst.weights[0] == 1.5);
}

TEST_CASE("parse accepts an empty set line") {
  Instance inst = parse_instance_text("p wmesc 2 1\ns 0.25\n");
  CHECK(inst.m() == 1);
  CHECK(inst.sets[0].none());
}

TEST_CASE("parse rejects malformed input with line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_instance_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };

  CHECK_THROWS_AS(parse_instance_text(""), ParseError);
  CHECK_THROWS_AS(parse_instance_text("p cover 2 1\ns 1 0\n"), ParseError);
  CHECK(line_of("p cover 2 1\ns 1 0\n") == 1);

  // negative weight
  CHECK_THROWS_WITH_AS(parse_instance_text("p wmesc 1 1\ns -1 0\n"),
                       "line 2: negative weight '-1'", ParseError);
  // non-finite weight
  CHECK_THROWS_AS(parse_instance_text("p wmesc 1 1\ns inf 0\n"), ParseError);
  // out-of-range element
  CHECK_THROWS_WITH_AS(parse_instance_text("p wmesc 2 1\ns 1.0 0 5\n"),
                       "line 2: element id 5 out of range (n=2)", ParseError);
  // duplicate element within a set
  CHECK(line_of("p wmesc 2 1\n# pad\ns 1.0 0 0\n") == 3);
  // body/header count mismatch, both directions
  CHECK_THROWS_AS(parse_instance_text("p wmesc 2 2\ns 1.0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_instance_text("p wmesc 2 1\ns 1.0 0\ns 1.0 1\n"),
                  ParseError);
  // junk line
  CHECK_THROWS_AS(parse_instance_text("p wmesc 2 1\nq 1.0 0\n"), ParseError);
  // capacity
  CHECK_THROWS_AS(parse_instance_text("p wmesc 5000 1\ns 1.0 0\n"),
                  ParseError);
}

TEST_CASE("serialize emits the canonical shortest-decimal form") {
  Instance inst = parse_instance_text(kSampleText);
  CHECK(serialize_instance(inst) ==
        "p wmesc 3 4\n"
        "s 1 0 1\n"
        "s 1 1 2\n"
        "s 0.5 2\n"
        "s 0.7 0\n");
}

TEST_CASE("parse/serialize round trip is byte-exact") {
  Instance inst = parse_instance_text(kSampleText);
  std::string first = serialize_instance(inst);
  Instance again = parse_instance_text(first);
  CHECK(again == inst);
  CHECK(serialize_instance(again) == first);
}

TEST_CASE("normalize drops empties and keeps the cheapest duplicate") {
  Instance inst;
  inst.n = 1;
  inst.sets = {Bitset::of(1, {0}), Bitset(1), Bitset::of(1, {0})};
  inst.weights = {2.0, 0.5, 1.0};
  Normalized norm = normalize(inst);
  CHECK(norm.instance.m() == 1);
  CHECK(norm.instance.sets[0] == Bitset::of(1, {0}));
  CHECK(norm.instance.weights == std::vector<double>{1.0});
  CHECK(norm.index_map == std::vector<int>{2});
}

TEST_CASE("normalize breaks weight ties to the lowest index") {
  Instance inst;
  inst.n = 2;
  inst.sets = {Bitset::of(2, {0, 1}), Bitset::of(2, {1, 0})};
  inst.weights = {3.0, 3.0};
  Normalized norm = normalize(inst);
  CHECK(norm.instance.m() == 1);
  CHECK(norm.index_map == std::vector<int>{0});
}

TEST_CASE("normalize is idempotent") {
  Instance inst = parse_instance_text(
      "p wmesc 3 5\ns 1.0 0 1\ns 0.5 0 1\ns 0.2\ns 0.3 2\ns 0.9 2\n");
  Normalized once = normalize(inst);
  Normalized twice = normalize(once.instance);
  CHECK(twice.instance == once.instance);
  for (std::size_t i = 0; i < twice.index_map.size(); ++i)
    CHECK(twice.index_map[i] == static_cast<int>(i));
}

TEST_CASE("verify_cover checks disjointness and exact union") {
  Instance inst = parse_instance_text(kSampleText);
  CHECK(verify_cover(inst, {0, 2}));
  CHECK(verify_cover(inst, {1, 3}));
  CHECK_FALSE(verify_cover(inst, {0, 1}));  // overlap at element 1
  CHECK_FALSE(verify_cover(inst, {3}));     // elements 1,2 uncovered
  CHECK_FALSE(verify_cover(inst, {0, 9}));  // index out of range
}

TEST_CASE("cover_weight sums in ascending index order") {
  Instance inst = parse_instance_text(kSampleText);
  CHECK(cover_weight(inst, {2, 0}) == 1.0 + 0.5);
  CHECK(cover_weight(inst, {}) == 0.0);
}

TEST_CASE("map_outcome rewrites indices and re-sums") {
  Instance inst;
  inst.n = 2;
  inst.sets = {Bitset::of(2, {0}), Bitset::of(2, {0}), Bitset::of(2, {1})};
  inst.weights = {2.0, 1.0, 0.25};
  Normalized norm = normalize(inst);
  CHECK(norm.index_map == std::vector<int>{1, 2});
  Outcome inner = Outcome::cover({0, 1}, 1.25);
  Outcome mapped = map_outcome(inner, inst, norm.index_map);
  CHECK(mapped.is_cover());
  CHECK(mapped.chosen == std::vector<int>{1, 2});
  CHECK(mapped.weight == 1.25);
  CHECK_FALSE(
      map_outcome(Outcome::no_solution(), inst, norm.index_map).is_cover());
}
