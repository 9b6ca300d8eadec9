#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kcut/model.hpp"

namespace kcut {

enum class LpStatus { Optimal, Infeasible, Unbounded };

class Tableau;
struct LpResult;
LpResult solve_lp(const Polyhedron& pol, const Vec& c, const Vec& h);
LpResult resolve_after_cut(Tableau tableau, const PolyRow& row);

// Exact simplex over the inequality form {A x + G y <= b} with free
// structural variables; only slacks are sign-constrained. Strict flags on
// rows are ignored here (rows are treated as closed).
//
// Variable ids: 0 is the objective value x_0, 1..p the integer variables,
// p+1..p+q the continuous ones, and n+1+i the slack of registry row i.
// The dictionary stores, for every basic variable v, an affine form
// v = const - sum_k coef_k * t_k over the nonbasic slack set.
//
// Among alternative optima the solver pivots on, level by level, until the
// solution is the lexicographically greatest feasible point in the order
// (x_0, x_1, ..., x_p, y_1, ..., y_q). Entering variable: most positive
// reduced cost, lowest id on ties; leaving variable: lexicographic ratio
// test, lowest id on full ties. Everything is deterministic.
class Tableau {
 public:
  Tableau() = default;
  Tableau(const Polyhedron& pol, const Vec& c, const Vec& h);

  int p() const { return p_; }
  int q() const { return q_; }
  int n_structural() const { return n_; }
  int registry_size() const { return static_cast<int>(rows_.size()); }
  const PolyRow& registry_row(int i) const { return rows_[i]; }

  int slack_var_id(int registry_idx) const { return n_ + 1 + registry_idx; }
  bool is_slack(int var) const { return var > n_; }
  const PolyRow& row_of_slack(int var) const { return rows_[var - n_ - 1]; }

  bool is_basic(int var) const { return basic_[var]; }
  Rat var_value(int var) const;
  Rat objective_value() const { return var_value(0); }
  Point point() const;

  // Dictionary row of a basic variable: constant and the nonzero
  // coefficients paired with their nonbasic variable ids, ascending.
  Rat dict_constant(int var) const;
  std::vector<std::pair<int, Rat>> dict_coeffs(int var) const;

  // Verifies that the dictionary still encodes the registry rows and the
  // objective exactly. Test support.
  bool consistent() const;

 private:
  struct Row {
    Rat c;
    Vec a;  // aligned with nonbasic_
  };

  int col_of(int var) const;
  void resort_columns();
  void pivot(int k, int leave_var);
  void stage_free_vars();
  bool phase_one();  // false: infeasible
  void erase_column(int var);
  LpStatus lex_optimize();
  bool dual_restore();              // false: infeasible
  int lex_ratio_leave(int k) const;  // -1: unbounded in that column
  void add_row(const PolyRow& row);
  void bump_pivots();

  int p_ = 0, q_ = 0, n_ = 0;
  std::vector<PolyRow> rows_;
  Vec c_, h_;
  std::vector<int> nonbasic_;  // ascending var ids
  std::vector<char> basic_;    // by var id
  std::vector<Row> dict_;      // by var id, meaningful when basic
  long pivots_ = 0;

  friend LpResult resolve_after_cut(Tableau tableau, const PolyRow& row);
  friend LpResult solve_lp(const Polyhedron& pol, const Vec& c, const Vec& h);
};

// solve_lp: max c.x + h.y over pol. On Optimal the point is the
// lexicographically greatest optimal point in the order (value, x, y) and
// the tableau is the terminal dictionary.
// resolve_after_cut: appends one row to a solved tableau and re-optimizes
// with dual simplex steps followed by the same lexicographic clean-up.
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Point point;   // meaningful when Optimal
  Rat value;     // meaningful when Optimal
  Tableau tableau;  // meaningful when Optimal
};

}  // namespace kcut
