#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "kcut/linalg.hpp"
#include "kcut/model.hpp"
#include "kcut/rational.hpp"

namespace kcut::testutil {

inline Rat R(const std::string& s) { return parse_rat(s); }

inline Vec rv(const std::string& s) {
  Vec out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(parse_rat(tok));
  return out;
}

inline IntVec zv(const std::string& s) {
  IntVec out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(Int(tok));
  return out;
}

inline Point pt(const std::string& xs, const std::string& ys) {
  return Point{rv(xs), rv(ys)};
}

inline std::string str(const Vec& v) {
  std::string out;
  for (const Rat& r : v) {
    if (!out.empty()) out += ' ';
    out += r.str();
  }
  return out;
}

}  // namespace kcut::testutil
