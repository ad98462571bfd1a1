#include "wmesc/reduction.hpp"

#include <istream>
#include <sstream>
#include <utility>

#include "text_util.hpp"
#include "wmesc/check.hpp"

namespace wmesc {

using detail::parse_count;
using detail::split_ws;

ParsedPacking parse_packing(std::istream& in) {
  int n_raw = 0;
  bool have_header = false;
  int declared_m = 0;
  int lineno = 0;
  std::vector<Bitset> raw_sets;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!have_header) {
      if (toks[0] != "p" || toks.size() != 4 || toks[1] != "pack")
        throw ParseError(lineno, "expected header 'p pack <n> <m>'");
      n_raw = parse_count(toks[2], "element count", lineno);
      declared_m = parse_count(toks[3], "set count", lineno);
      if (n_raw > kMaxElements)
        throw ParseError(lineno, "element count " + std::to_string(n_raw) +
                                     " exceeds capacity " +
                                     std::to_string(kMaxElements));
      if (declared_m > kMaxSets)
        throw ParseError(lineno, "set count " + std::to_string(declared_m) +
                                     " exceeds capacity " +
                                     std::to_string(kMaxSets));
      raw_sets.reserve(declared_m);
      have_header = true;
      continue;
    }
    if (toks[0] != "s")
      throw ParseError(lineno, "unrecognized line '" + toks[0] + "...'");
    if (static_cast<int>(raw_sets.size()) == declared_m)
      throw ParseError(lineno, "more than the declared " +
                                   std::to_string(declared_m) + " set lines");
    Bitset s(n_raw);
    for (std::size_t i = 1; i < toks.size(); ++i) {
      int e = parse_count(toks[i], "element id", lineno);
      if (e >= n_raw)
        throw ParseError(lineno, "element id " + std::to_string(e) +
                                     " out of range (n=" +
                                     std::to_string(n_raw) + ")");
      if (s.test(e))
        throw ParseError(lineno, "duplicate element id " + std::to_string(e) +
                                     " in set");
      s.set(e);
    }
    raw_sets.push_back(std::move(s));
  }
  if (!have_header) throw ParseError(lineno, "missing 'p pack' header");
  if (static_cast<int>(raw_sets.size()) != declared_m)
    throw ParseError(lineno, "declared " + std::to_string(declared_m) +
                                 " sets but found " +
                                 std::to_string(raw_sets.size()));

  // Compact away ground elements no set mentions.
  Bitset used(n_raw);
  for (const Bitset& s : raw_sets) used |= s;
  ParsedPacking parsed;
  parsed.element_map = used.to_indices();
  std::vector<int> new_id(n_raw, -1);
  for (std::size_t i = 0; i < parsed.element_map.size(); ++i)
    new_id[parsed.element_map[i]] = static_cast<int>(i);
  parsed.pack.n = static_cast<int>(parsed.element_map.size());
  parsed.pack.sets.reserve(raw_sets.size());
  for (const Bitset& s : raw_sets) {
    Bitset t(parsed.pack.n);
    s.for_each([&](int e) { t.set(new_id[e]); });
    parsed.pack.sets.push_back(std::move(t));
  }
  return parsed;
}

ParsedPacking parse_packing_text(const std::string& text) {
  std::istringstream in(text);
  return parse_packing(in);
}

ReducedInstance reduce(const PackingInstance& pack) {
  const int n = pack.n;
  const int m = pack.m();
  const long long elements = n + static_cast<long long>(m) * (n + 1);
  const long long sets = elements + m;
  if (elements > kMaxElements)
    throw CapacityError("reduced instance needs " + std::to_string(elements) +
                        " elements, capacity is " +
                        std::to_string(kMaxElements));
  if (sets > kMaxSets)
    throw CapacityError("reduced instance needs " + std::to_string(sets) +
                        " sets, capacity is " + std::to_string(kMaxSets));

  ReducedInstance red;
  red.packing_n = n;
  red.packing_m = m;
  red.f2_begin = n;
  red.wmesc.n = static_cast<int>(elements);
  red.wmesc.sets.reserve(static_cast<std::size_t>(sets));
  const int total = static_cast<int>(sets);
  red.wmesc.weights.assign(static_cast<std::size_t>(total), 1.0);

  auto tag_id = [n](int i, int j) { return n + i * (n + 1) + j; };

  for (int e = 0; e < n; ++e)
    red.wmesc.sets.push_back(Bitset::of(red.wmesc.n, {e}));
  for (int i = 0; i < m; ++i) {
    Bitset block(red.wmesc.n);
    pack.sets[i].for_each([&](int e) { block.set(e); });
    for (int j = 0; j <= n; ++j) block.set(tag_id(i, j));
    red.wmesc.sets.push_back(std::move(block));
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j)
      red.wmesc.sets.push_back(Bitset::of(red.wmesc.n, {tag_id(i, j)}));

  WMESC_ASSERT(red.wmesc.m() == total);
  return red;
}

std::vector<int> extract_packing(const ReducedInstance& reduced,
                                 const Outcome& out) {
  WMESC_ASSERT(out.is_cover());
  WMESC_ASSERT(cover_cost_identity_holds(reduced, out));
  std::vector<int> picks;
  for (int s : out.chosen)
    if (s >= reduced.f2_begin && s < reduced.f2_end())
      picks.push_back(reduced.packing_index(s));
  return picks;  // out.chosen is ascending, so picks is too
}

bool cover_cost_identity_holds(const ReducedInstance& reduced,
                               const Outcome& out) {
  if (!out.is_cover()) return false;
  const int n = reduced.packing_n;
  const int m = reduced.packing_m;
  int k = 0;
  Bitset covered(reduced.wmesc.n);
  for (int s : out.chosen) {
    if (s < 0 || s >= reduced.wmesc.m()) return false;
    if (s >= reduced.f2_begin && s < reduced.f2_end()) {
      ++k;
      covered |= reduced.wmesc.sets[s];
    }
  }
  int n1 = 0;  // ground elements the chosen blocks leave uncovered
  for (int e = 0; e < n; ++e)
    if (!covered.test(e)) ++n1;
  const long long expected =
      k + static_cast<long long>(m - k) * (n + 1) + n1;
  return static_cast<long long>(out.chosen.size()) == expected;
}

}  // namespace wmesc
