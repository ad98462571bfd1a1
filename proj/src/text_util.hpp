#pragma once

// Internal line-oriented parsing helpers shared by the instance and packing
// readers. Not installed; include only from sources in this directory.

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "wmesc/instance.hpp"

namespace wmesc::detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int parse_count(const std::string& tok, const char* what, int lineno) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size() || v < 0)
    throw ParseError(lineno, std::string("invalid ") + what + " '" + tok + "'");
  return v;
}

inline double parse_weight(const std::string& tok, int lineno) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || tok.empty())
    throw ParseError(lineno, "invalid weight '" + tok + "'");
  if (!std::isfinite(v))
    throw ParseError(lineno, "non-finite weight '" + tok + "'");
  if (v < 0.0) throw ParseError(lineno, "negative weight '" + tok + "'");
  return v;
}

// Shortest decimal form that round-trips the exact double.
inline std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

}  // namespace wmesc::detail
