#include "kcut/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace kcut {

namespace {
constexpr long kPivotLimit = 2000000;
}

Tableau::Tableau(const Polyhedron& pol, const Vec& c, const Vec& h)
    : p_(pol.p), q_(pol.q), n_(pol.p + pol.q), rows_(pol.rows), c_(c), h_(h) {
  assert(static_cast<int>(c.size()) == p_);
  assert(static_cast<int>(h.size()) == q_);
  int m = registry_size();
  nonbasic_.resize(n_);
  std::iota(nonbasic_.begin(), nonbasic_.end(), 1);
  basic_.assign(n_ + 1 + m, 0);
  dict_.assign(n_ + 1 + m, Row{});
  basic_[0] = 1;
  Row obj;
  obj.c = Rat(0);
  obj.a.resize(n_);
  for (int j = 0; j < p_; ++j) obj.a[j] = -c[j];
  for (int j = 0; j < q_; ++j) obj.a[p_ + j] = -h[j];
  dict_[0] = std::move(obj);
  for (int i = 0; i < m; ++i) {
    const PolyRow& r = rows_[i];
    assert(static_cast<int>(r.a.size()) == p_);
    assert(static_cast<int>(r.g.size()) == q_);
    Row row;
    row.c = r.rhs;
    row.a.resize(n_);
    for (int j = 0; j < p_; ++j) row.a[j] = r.a[j];
    for (int j = 0; j < q_; ++j) row.a[p_ + j] = r.g[j];
    int s = slack_var_id(i);
    basic_[s] = 1;
    dict_[s] = std::move(row);
  }
}

int Tableau::col_of(int var) const {
  auto it = std::lower_bound(nonbasic_.begin(), nonbasic_.end(), var);
  assert(it != nonbasic_.end() && *it == var);
  return static_cast<int>(it - nonbasic_.begin());
}

void Tableau::resort_columns() {
  if (std::is_sorted(nonbasic_.begin(), nonbasic_.end())) return;
  int nc = static_cast<int>(nonbasic_.size());
  std::vector<int> idx(nc);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return nonbasic_[a] < nonbasic_[b]; });
  std::vector<int> nb(nc);
  for (int i = 0; i < nc; ++i) nb[i] = nonbasic_[idx[i]];
  nonbasic_ = std::move(nb);
  for (std::size_t v = 0; v < dict_.size(); ++v) {
    if (!basic_[v]) continue;
    Vec a(nc);
    for (int i = 0; i < nc; ++i) a[i] = dict_[v].a[idx[i]];
    dict_[v].a = std::move(a);
  }
}

void Tableau::bump_pivots() {
  if (++pivots_ > kPivotLimit)
    throw std::runtime_error("simplex: pivot limit exceeded");
}

void Tableau::pivot(int k, int leave_var) {
  bump_pivots();
  assert(basic_[leave_var]);
  int enter_var = nonbasic_[k];
  Row L = std::move(dict_[leave_var]);
  Rat piv = L.a[k];
  assert(!piv.is_zero());
  Row E;
  E.c = L.c / piv;
  E.a.resize(L.a.size());
  for (std::size_t j = 0; j < L.a.size(); ++j) E.a[j] = L.a[j] / piv;
  E.a[k] = Rat(1) / piv;
  for (std::size_t v = 0; v < dict_.size(); ++v) {
    if (!basic_[v] || static_cast<int>(v) == leave_var) continue;
    Row& R = dict_[v];
    Rat r = R.a[k];
    if (r.is_zero()) continue;
    R.a[k] = Rat(0);
    R.c = R.c - r * E.c;
    for (std::size_t j = 0; j < R.a.size(); ++j) R.a[j] = R.a[j] - r * E.a[j];
  }
  dict_[leave_var] = Row{};
  basic_[leave_var] = 0;
  dict_[enter_var] = std::move(E);
  basic_[enter_var] = 1;
  nonbasic_[k] = leave_var;
  resort_columns();
}

void Tableau::stage_free_vars() {
  for (int j = 1; j <= n_; ++j) {
    if (basic_[j]) continue;
    int k = col_of(j);
    int leave = -1;
    for (int v = n_ + 1; v < static_cast<int>(dict_.size()); ++v) {
      if (!basic_[v]) continue;
      if (!dict_[v].a[k].is_zero()) {
        leave = v;
        break;
      }
    }
    if (leave < 0) continue;  // lineality direction, stays nonbasic
    pivot(k, leave);
  }
}

int Tableau::lex_ratio_leave(int k) const {
  // Blocking rows are the sign-constrained ones: slacks (and the phase one
  // variable, whose id is also above n_). Smallest ratio vector
  // (const, coefs)/pivot wins; ascending scan keeps the lowest id on ties.
  int best = -1;
  for (int v = n_ + 1; v < static_cast<int>(dict_.size()); ++v) {
    if (!basic_[v]) continue;
    const Rat& av = dict_[v].a[k];
    if (!(av > Rat(0))) continue;
    if (best < 0) {
      best = v;
      continue;
    }
    const Row& B = dict_[best];
    const Row& V = dict_[v];
    const Rat& ab = B.a[k];
    int cmp = 0;
    Rat lhs = V.c * ab;
    Rat rhs = B.c * av;
    if (lhs != rhs) {
      cmp = lhs < rhs ? -1 : 1;
    } else {
      for (std::size_t j = 0; j < V.a.size(); ++j) {
        Rat l2 = V.a[j] * ab;
        Rat r2 = B.a[j] * av;
        if (l2 != r2) {
          cmp = l2 < r2 ? -1 : 1;
          break;
        }
      }
    }
    if (cmp < 0) best = v;
  }
  return best;
}

bool Tableau::phase_one() {
  int worst = -1;
  for (int v = n_ + 1; v < static_cast<int>(dict_.size()); ++v) {
    if (!basic_[v]) continue;
    if (dict_[v].c.sign() < 0 &&
        (worst < 0 || dict_[v].c < dict_[worst].c))
      worst = v;
  }
  if (worst < 0) return true;

  int aux = n_ + 1 + registry_size();
  basic_.resize(aux + 1, 0);
  dict_.resize(aux + 1);
  nonbasic_.push_back(aux);
  for (std::size_t v = 0; v + 1 < dict_.size(); ++v) {
    if (!basic_[v]) continue;
    dict_[v].a.push_back(static_cast<int>(v) > n_ ? Rat(-1) : Rat(0));
  }
  pivot(col_of(aux), worst);

  while (basic_[aux]) {
    const Row& X = dict_[aux];
    int enter = -1;
    for (std::size_t j = 0; j < X.a.size(); ++j) {
      if (nonbasic_[j] <= n_) {
        assert(X.a[j].is_zero());
        continue;
      }
      if (X.a[j].sign() > 0 && (enter < 0 || X.a[j] > X.a[enter]))
        enter = static_cast<int>(j);
    }
    if (enter < 0) {
      if (X.c.sign() > 0) return false;  // min of the violation is positive
      int k = -1;
      for (std::size_t j = 0; j < X.a.size(); ++j) {
        if (!X.a[j].is_zero()) {
          k = static_cast<int>(j);
          break;
        }
      }
      if (k < 0) {
        basic_[aux] = 0;  // dictionary row vanished entirely
        dict_[aux] = Row{};
        break;
      }
      pivot(k, aux);
      break;
    }
    int leave = lex_ratio_leave(enter);
    assert(leave >= 0);  // the phase one row itself always blocks
    pivot(enter, leave);
    if (leave == aux) break;
  }
  if (!basic_[aux] &&
      std::binary_search(nonbasic_.begin(), nonbasic_.end(), aux))
    erase_column(aux);
  return true;
}

void Tableau::erase_column(int var) {
  int k = col_of(var);
  nonbasic_.erase(nonbasic_.begin() + k);
  for (std::size_t v = 0; v < dict_.size(); ++v) {
    if (!basic_[v]) continue;
    dict_[v].a.erase(dict_[v].a.begin() + k);
  }
}

LpStatus Tableau::lex_optimize() {
  for (int level = 0; level <= n_; ++level) {
    if (!basic_[level]) continue;  // pinned lineality coordinate
    for (;;) {
      int nc = static_cast<int>(nonbasic_.size());
      bool free_dir = false;
      int best = -1;
      for (int k = 0; k < nc; ++k) {
        bool clean = true;
        for (int j = 0; j < level; ++j) {
          if (basic_[j]) {
            if (!dict_[j].a[k].is_zero()) {
              clean = false;
              break;
            }
          } else if (nonbasic_[k] == j) {
            clean = false;
            break;
          }
        }
        if (!clean) continue;
        const Rat& coef = dict_[level].a[k];
        if (nonbasic_[k] <= n_) {
          if (!coef.is_zero()) {
            free_dir = true;
            break;
          }
          continue;
        }
        if (coef.sign() < 0 && (best < 0 || coef < dict_[level].a[best]))
          best = k;
      }
      if (free_dir) {
        if (level == 0) return LpStatus::Unbounded;
        break;  // no maximum at this level, keep the current value
      }
      if (best < 0) break;  // level optimal
      int leave = lex_ratio_leave(best);
      if (leave < 0) {
        if (level == 0) return LpStatus::Unbounded;
        break;
      }
      pivot(best, leave);
    }
  }
  return LpStatus::Optimal;
}

bool Tableau::dual_restore() {
  for (;;) {
    int leave = -1;
    for (int v = n_ + 1; v < static_cast<int>(dict_.size()); ++v) {
      if (basic_[v] && dict_[v].c.sign() < 0) {
        leave = v;
        break;
      }
    }
    if (leave < 0) return true;
    const Row& L = dict_[leave];
    int nc = static_cast<int>(nonbasic_.size());
    // Entering column: smallest column-over-pivot ratio vector, rows taken
    // in variable id order. Lowest nonbasic id breaks full ties.
    int best = -1;
    Rat wbest;
    for (int k = 0; k < nc; ++k) {
      if (nonbasic_[k] <= n_) {
        assert(L.a[k].is_zero());
        continue;
      }
      if (!(L.a[k] < Rat(0))) continue;
      Rat w = -L.a[k];
      if (best < 0) {
        best = k;
        wbest = w;
        continue;
      }
      int cmp = 0;
      for (std::size_t v = 0; v < dict_.size() && cmp == 0; ++v) {
        if (!basic_[v]) continue;
        Rat lhs = dict_[v].a[k] * wbest;
        Rat rhs = dict_[v].a[best] * w;
        if (lhs != rhs) cmp = lhs < rhs ? -1 : 1;
      }
      if (cmp < 0) {
        best = k;
        wbest = w;
      }
    }
    if (best < 0) return false;  // row stays negative for every t >= 0
    pivot(best, leave);
  }
}

void Tableau::add_row(const PolyRow& row) {
  assert(static_cast<int>(row.a.size()) == p_);
  assert(static_cast<int>(row.g.size()) == q_);
  rows_.push_back(row);
  int s = n_ + registry_size();  // id of the new slack
  basic_.resize(s + 1, 0);
  dict_.resize(s + 1);
  Row R;
  R.c = row.rhs;
  R.a.assign(nonbasic_.size(), Rat(0));
  for (int j = 1; j <= n_; ++j) {
    Rat coef = j <= p_ ? row.a[j - 1] : row.g[j - p_ - 1];
    if (coef.is_zero()) continue;
    if (basic_[j]) {
      R.c = R.c - coef * dict_[j].c;
      for (std::size_t t = 0; t < R.a.size(); ++t)
        R.a[t] = R.a[t] - coef * dict_[j].a[t];
    } else {
      int k = col_of(j);
      R.a[k] = R.a[k] + coef;
    }
  }
  basic_[s] = 1;
  dict_[s] = std::move(R);
}

Rat Tableau::var_value(int var) const {
  return basic_[var] ? dict_[var].c : Rat(0);
}

Point Tableau::point() const {
  Point pt;
  pt.x.resize(p_);
  pt.y.resize(q_);
  for (int j = 0; j < p_; ++j) pt.x[j] = var_value(1 + j);
  for (int j = 0; j < q_; ++j) pt.y[j] = var_value(1 + p_ + j);
  return pt;
}

Rat Tableau::dict_constant(int var) const {
  assert(basic_[var]);
  return dict_[var].c;
}

std::vector<std::pair<int, Rat>> Tableau::dict_coeffs(int var) const {
  assert(basic_[var]);
  std::vector<std::pair<int, Rat>> out;
  const Row& R = dict_[var];
  for (std::size_t k = 0; k < R.a.size(); ++k)
    if (!R.a[k].is_zero()) out.emplace_back(nonbasic_[k], R.a[k]);
  return out;
}

bool Tableau::consistent() const {
  if (!std::is_sorted(nonbasic_.begin(), nonbasic_.end())) return false;
  for (int v : nonbasic_)
    if (basic_[v]) return false;
  int nc = static_cast<int>(nonbasic_.size());
  // Rebuild each registry slack and the objective from the structural
  // variables' dictionary rows and compare.
  auto expand = [&](const Vec& coef_x, const Vec& coef_y, const Rat& cst) {
    Row F;
    F.c = cst;
    F.a.assign(nc, Rat(0));
    for (int j = 1; j <= n_; ++j) {
      Rat coef = j <= p_ ? coef_x[j - 1] : coef_y[j - p_ - 1];
      if (coef.is_zero()) continue;
      if (basic_[j]) {
        F.c = F.c - coef * dict_[j].c;
        for (int t = 0; t < nc; ++t) F.a[t] = F.a[t] - coef * dict_[j].a[t];
      } else {
        F.a[col_of(j)] = F.a[col_of(j)] + coef;
      }
    }
    return F;
  };
  auto matches = [&](const Row& F, int var) {
    if (basic_[var]) {
      if (F.c != dict_[var].c) return false;
      for (int t = 0; t < nc; ++t)
        if (F.a[t] != dict_[var].a[t]) return false;
      return true;
    }
    // Nonbasic slack: the form must reduce to the variable itself.
    if (!F.c.is_zero()) return false;
    int kk = col_of(var);
    for (int t = 0; t < nc; ++t) {
      Rat want = t == kk ? Rat(-1) : Rat(0);
      if (F.a[t] != want) return false;
    }
    return true;
  };
  for (int i = 0; i < registry_size(); ++i) {
    const PolyRow& r = rows_[i];
    if (!matches(expand(r.a, r.g, r.rhs), slack_var_id(i))) return false;
  }
  Vec negc(p_), negh(q_);
  for (int j = 0; j < p_; ++j) negc[j] = -c_[j];
  for (int j = 0; j < q_; ++j) negh[j] = -h_[j];
  if (!matches(expand(negc, negh, Rat(0)), 0)) return false;
  return true;
}

LpResult solve_lp(const Polyhedron& pol, const Vec& c, const Vec& h) {
  Tableau t(pol, c, h);
  t.stage_free_vars();
  if (!t.phase_one()) {
    LpResult r;
    r.status = LpStatus::Infeasible;
    return r;
  }
  LpStatus st = t.lex_optimize();
  LpResult r;
  r.status = st;
  if (st == LpStatus::Optimal) {
    r.point = t.point();
    r.value = t.objective_value();
    r.tableau = std::move(t);
  }
  return r;
}

LpResult resolve_after_cut(Tableau tableau, const PolyRow& row) {
  tableau.pivots_ = 0;
  tableau.add_row(row);
  tableau.stage_free_vars();
  LpResult r;
  if (!tableau.dual_restore()) {
    r.status = LpStatus::Infeasible;
    return r;
  }
  LpStatus st = tableau.lex_optimize();
  r.status = st;
  if (st == LpStatus::Optimal) {
    r.point = tableau.point();
    r.value = tableau.objective_value();
    r.tableau = std::move(tableau);
  }
  return r;
}

}  // namespace kcut
