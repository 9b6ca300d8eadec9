#pragma once

#include "kcut/model.hpp"
#include "kcut/simplex.hpp"

namespace kcut {

// Lowest-index basic variable with a fractional value among the integer
// variables x_1..x_p, or -1 when all are integral. With include_x0 the
// objective variable x_0 joins the candidate set ahead of x_1.
int least_index_fractional(const Tableau& t, bool include_x0);

// Mixed integer rounding cut from the dictionary row of a basic variable
// with fractional value. Nonbasic slacks backed by all-integer rows with no
// continuous columns take the integer coefficient map, everything else the
// continuous one; the slack-space inequality is then substituted back into
// structural variables and scaled to primitive integer coefficients. When
// every coefficient cancels the result is 0 <= negative, witnessing that no
// integer point fits. Throws if the row touches a free nonbasic column.
Cut gmi_cut(const Tableau& t, int var);

}  // namespace kcut
