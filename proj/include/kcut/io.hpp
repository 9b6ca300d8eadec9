#pragma once

#include <iosfwd>
#include <string>

#include "kcut/disjunction.hpp"
#include "kcut/model.hpp"

namespace kcut {

// Text format:
//   milp p <int> q <int>
//   maximize <c...> | <h...>
//   st
//   <a...> | <g...> <= <rhs>
//   ...
//   end
// '#' starts a comment, blank lines are skipped, rationals look like -3/4.
// Errors mention the 1-based line number.
MilpInstance parse_milp(std::istream& in);
MilpInstance parse_milp(const std::string& text);
std::string serialize_milp(const MilpInstance& inst);

// Disjunction text format:
//   dis k <int> p <int>
//   <d...> <= <delta>     (k lines, integers only)
Disjunction parse_disjunction(std::istream& in);
Disjunction parse_disjunction(const std::string& text);
std::string serialize_disjunction(const Disjunction& dis);

// One-line cut "a... | b... <= g" with p and q known from context.
Cut parse_cut_expr(const std::string& text, int p, int q);
std::string cut_expr(const Cut& cut);

}  // namespace kcut
