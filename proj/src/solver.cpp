#include "kcut/solver.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "kcut/disjunction.hpp"
#include "kcut/gmi.hpp"
#include "kcut/simplex.hpp"

namespace kcut {

bool check_bounded(const MilpInstance& inst) {
  Polyhedron pol = polyhedron_of(inst);
  int n = inst.p + inst.q;
  for (int j = 0; j < n; ++j) {
    Vec c(inst.p, Rat(0)), h(inst.q, Rat(0));
    Rat& slot = j < inst.p ? c[j] : h[j - inst.p];
    slot = Rat(1);
    LpResult up = solve_lp(pol, c, h);
    if (up.status == LpStatus::Infeasible) return true;  // empty is bounded
    if (up.status == LpStatus::Unbounded) return false;
    slot = Rat(-1);
    if (solve_lp(pol, c, h).status == LpStatus::Unbounded) return false;
  }
  return true;
}

namespace {

MilpInstance instance_of_tableau(const Tableau& t, const Vec& c, const Vec& h) {
  MilpInstance cur;
  cur.p = t.p();
  cur.q = t.q();
  cur.c = c;
  cur.h = h;
  cur.A = Mat(0, cur.p);
  cur.G = Mat(0, cur.q);
  for (int i = 0; i < t.registry_size(); ++i) {
    const PolyRow& row = t.registry_row(i);
    cur.A.push_row(row.a);
    cur.G.push_row(row.g);
    cur.b.push_back(row.rhs);
  }
  return cur;
}

}  // namespace

MilpResult solve(const MilpInstance& inst, const SolveOptions& opt) {
  inst.validate();
  ScaledInstance sc = scale_to_integer_data(inst);
  const MilpInstance& si = sc.instance;
  Rat mult{sc.objective_multiplier};
  if (!check_bounded(si)) throw std::runtime_error("unbounded instance");
  bool use_x0 = opt.include_x0 && is_zero(si.h);

  MilpResult res;
  auto trace = [&](TraceEvent ev) {
    if (opt.trace) res.trace.push_back(std::move(ev));
  };
  auto lp_event = [&](const LpResult& lp) {
    TraceEvent ev;
    ev.kind = TraceEvent::Kind::LpSolved;
    ev.value = lp.value / mult;
    ev.point = lp.point;
    trace(std::move(ev));
  };
  auto finish = [&](MilpStatus st) {
    TraceEvent ev;
    ev.kind = TraceEvent::Kind::End;
    ev.terminal = st;
    trace(std::move(ev));
    res.status = st;
  };

  LpResult lp = solve_lp(polyhedron_of(si), si.c, si.h);
  if (lp.status == LpStatus::Infeasible) {
    finish(MilpStatus::Infeasible);
    return res;
  }
  assert(lp.status == LpStatus::Optimal);  // unbounded ruled out above
  lp_event(lp);

  for (int outer = 0; outer < opt.max_outer; ++outer) {
    Rat level = lp.value;
    int inner = 0;
    while (!is_integer_point(lp.point)) {
      if (++inner > opt.max_inner) {
        finish(MilpStatus::IterationLimit);
        return res;
      }
      // One round: a cut from every fractional row of this tableau.
      std::vector<int> frac;
      if (use_x0 && !lp.tableau.objective_value().is_integer())
        frac.push_back(0);
      for (int j = 1; j <= si.p; ++j)
        if (!lp.tableau.var_value(j).is_integer()) frac.push_back(j);
      assert(!frac.empty());
      // All cuts of a round come from the same optimal dictionary; applying
      // one must not skew the source rows of the next.
      std::vector<Cut> cuts;
      for (int j : frac) {
        assert(lp.tableau.is_basic(j));  // fractional, so not at zero
        cuts.push_back(gmi_cut(lp.tableau, j));
      }
      bool infeasible = false;
      for (size_t i = 0; i < cuts.size(); ++i) {
        TraceEvent ev;
        ev.kind = TraceEvent::Kind::GmiCut;
        ev.var = frac[i];
        ev.cut = cuts[i];
        trace(std::move(ev));
        ++res.gmi_cuts;
        LpResult nxt =
            resolve_after_cut(std::move(lp.tableau), row_of_cut(cuts[i]));
        if (nxt.status == LpStatus::Infeasible) {
          infeasible = true;
          break;
        }
        assert(nxt.status == LpStatus::Optimal);
        lp = std::move(nxt);
      }
      if (infeasible) {
        finish(MilpStatus::Infeasible);
        return res;
      }
      lp_event(lp);
      if (lp.value < level) break;  // relaxation bound moved, change gears
    }
    if (is_integer_point(lp.point)) {
      res.point = lp.point;
      res.value = lp.value / mult;
      finish(MilpStatus::Optimal);
      return res;
    }

    // Pin the objective to an attainable integer-compatible level.
    MilpInstance cur = instance_of_tableau(lp.tableau, si.c, si.h);
    ObjectiveCutReport rep = objective_cut(cur, lp.value, RoundingMode::Weak);
    TraceEvent ev;
    ev.kind = TraceEvent::Kind::ObjectiveCut;
    ev.gamma_star = lp.value / mult;
    ev.gamma_hat = rep.gamma_hat / mult;
    ev.ray_count = static_cast<int>(rep.rays.size());
    ev.cut = Cut{inst.c, inst.h, rep.gamma_hat / mult};
    trace(std::move(ev));
    ++res.objective_cuts;
    PolyRow row;
    row.a = si.c;
    row.g = si.h;
    row.rhs = rep.gamma_hat;
    LpResult nxt = resolve_after_cut(std::move(lp.tableau), row);
    if (nxt.status == LpStatus::Infeasible) {
      finish(MilpStatus::Infeasible);
      return res;
    }
    assert(nxt.status == LpStatus::Optimal);
    lp = std::move(nxt);
    lp_event(lp);
  }
  finish(MilpStatus::IterationLimit);
  return res;
}

}  // namespace kcut
