#include "kcut/gmi.hpp"

#include <cassert>
#include <stdexcept>

namespace kcut {

int least_index_fractional(const Tableau& t, bool include_x0) {
  if (include_x0 && !t.objective_value().is_integer()) return 0;
  for (int j = 1; j <= t.p(); ++j)
    if (!t.var_value(j).is_integer()) return j;
  return -1;
}

namespace {

bool integer_backed(const PolyRow& row) {
  if (!is_zero(row.g)) return false;
  if (!row.rhs.is_integer()) return false;
  return all_integer(row.a);
}

}  // namespace

Cut gmi_cut(const Tableau& t, int var) {
  assert(var >= 0 && var <= t.p());
  assert(t.is_basic(var));
  Rat f0 = t.dict_constant(var).frac();
  assert(!f0.is_zero());
  Rat one(1);
  Rat scale = f0 / (one - f0);

  Cut cut;
  cut.alpha.assign(t.p(), Rat(0));
  cut.beta.assign(t.q(), Rat(0));
  cut.gamma = -f0;
  for (const auto& [tk, a] : t.dict_coeffs(var)) {
    if (!t.is_slack(tk))
      throw std::logic_error("gmi: dictionary row uses a free column");
    const PolyRow& src = t.row_of_slack(tk);
    Rat pi;
    if (integer_backed(src)) {
      Rat f = a.frac();
      pi = f <= f0 ? f : scale * (one - f);
    } else {
      pi = a >= Rat(0) ? a : scale * (-a);
    }
    if (pi.is_zero()) continue;
    // pi * slack expanded: slack = rhs - a.x - g.y, inequality sum >= f0.
    for (int j = 0; j < t.p(); ++j)
      cut.alpha[j] = cut.alpha[j] + pi * src.a[j];
    for (int j = 0; j < t.q(); ++j)
      cut.beta[j] = cut.beta[j] + pi * src.g[j];
    cut.gamma = cut.gamma + pi * src.rhs;
  }
  return normalized(cut);
}

}  // namespace kcut
