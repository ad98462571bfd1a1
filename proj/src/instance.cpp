#include "wmesc/instance.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "text_util.hpp"

namespace wmesc {

using detail::format_double;
using detail::parse_count;
using detail::parse_weight;
using detail::split_ws;

Instance parse_instance(std::istream& in) {
  Instance inst;
  bool have_header = false;
  int declared_m = 0;
  int lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!have_header) {
      if (toks[0] != "p" || toks.size() != 4 || toks[1] != "wmesc")
        throw ParseError(lineno, "expected header 'p wmesc <n> <m>'");
      inst.n = parse_count(toks[2], "element count", lineno);
      declared_m = parse_count(toks[3], "set count", lineno);
      if (inst.n > kMaxElements)
        throw ParseError(lineno, "element count " + std::to_string(inst.n) +
                                     " exceeds capacity " +
                                     std::to_string(kMaxElements));
      if (declared_m > kMaxSets)
        throw ParseError(lineno, "set count " + std::to_string(declared_m) +
                                     " exceeds capacity " +
                                     std::to_string(kMaxSets));
      inst.sets.reserve(declared_m);
      inst.weights.reserve(declared_m);
      have_header = true;
      continue;
    }
    if (toks[0] != "s")
      throw ParseError(lineno, "unrecognized line '" + toks[0] + "...'");
    if (inst.m() == declared_m)
      throw ParseError(lineno, "more than the declared " +
                                   std::to_string(declared_m) + " set lines");
    if (toks.size() < 2) throw ParseError(lineno, "set line missing weight");
    double w = parse_weight(toks[1], lineno);
    Bitset s(inst.n);
    for (std::size_t i = 2; i < toks.size(); ++i) {
      int e = parse_count(toks[i], "element id", lineno);
      if (e >= inst.n)
        throw ParseError(lineno, "element id " + std::to_string(e) +
                                     " out of range (n=" +
                                     std::to_string(inst.n) + ")");
      if (s.test(e))
        throw ParseError(lineno, "duplicate element id " + std::to_string(e) +
                                     " in set");
      s.set(e);
    }
    inst.sets.push_back(std::move(s));
    inst.weights.push_back(w);
  }
  if (!have_header) throw ParseError(lineno, "missing 'p wmesc' header");
  if (inst.m() != declared_m)
    throw ParseError(lineno, "declared " + std::to_string(declared_m) +
                                 " sets but found " +
                                 std::to_string(inst.m()));
  return inst;
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::string out = "p wmesc " + std::to_string(inst.n) + " " +
                    std::to_string(inst.m()) + "\n";
  for (int i = 0; i < inst.m(); ++i) {
    out += "s " + format_double(inst.weights[i]);
    inst.sets[i].for_each([&](int e) { out += " " + std::to_string(e); });
    out += "\n";
  }
  return out;
}

Normalized normalize(const Instance& inst) {
  Normalized result;
  result.instance.n = inst.n;
  // content hash -> new index of the kept copy
  std::unordered_map<std::uint64_t, std::vector<int>> by_hash;
  for (int i = 0; i < inst.m(); ++i) {
    if (inst.sets[i].none()) continue;  // w >= 0, so dropping never hurts
    std::uint64_t h = inst.sets[i].hash();
    auto& bucket = by_hash[h];
    int found = -1;
    for (int ni : bucket)
      if (result.instance.sets[ni] == inst.sets[i]) {
        found = ni;
        break;
      }
    if (found < 0) {
      bucket.push_back(result.instance.m());
      result.index_map.push_back(i);
      result.instance.sets.push_back(inst.sets[i]);
      result.instance.weights.push_back(inst.weights[i]);
    } else if (inst.weights[i] < result.instance.weights[found]) {
      result.instance.weights[found] = inst.weights[i];
      result.index_map[found] = i;
    }
  }
  return result;
}

bool verify_cover(const Instance& inst, const std::vector<int>& chosen) {
  Bitset covered(inst.n);
  for (int i : chosen) {
    if (i < 0 || i >= inst.m()) return false;
    if (covered.intersects(inst.sets[i])) return false;
    covered |= inst.sets[i];
  }
  Bitset all(inst.n);
  all.set_first(inst.n);
  return covered == all;
}

double cover_weight(const Instance& inst, std::vector<int> chosen) {
  std::sort(chosen.begin(), chosen.end());
  double w = 0.0;
  for (int i : chosen) w += inst.weights[i];
  return w;
}

Outcome map_outcome(const Outcome& out, const Instance& original,
                    const std::vector<int>& index_map) {
  if (!out.is_cover()) return Outcome::no_solution();
  std::vector<int> chosen;
  chosen.reserve(out.chosen.size());
  for (int i : out.chosen) chosen.push_back(index_map.at(i));
  std::sort(chosen.begin(), chosen.end());
  double w = cover_weight(original, chosen);
  return Outcome::cover(std::move(chosen), w);
}

}  // namespace wmesc
