#include "kcut/projection.hpp"

#include <cassert>
#include <set>

#include "kcut/simplex.hpp"

namespace kcut {

namespace {

Rat dot_col(const IntVec& v, const Mat& e, int col) {
  Rat s(0);
  for (int i = 0; i < e.row_count(); ++i) {
    if (sgn(v[i]) == 0) continue;
    s = s + Rat(v[i]) * e[i][col];
  }
  return s;
}

// Rays are adjacent when the equalities active at both of them leave a rank
// gap of exactly two degrees of freedom.
bool adjacent(const IntVec& r1, const IntVec& r2, const Mat& e, int cols_done) {
  int n = static_cast<int>(r1.size());
  std::vector<Vec> rows;
  for (int j = 0; j < cols_done; ++j) {
    Vec row(n);
    for (int i = 0; i < n; ++i) row[i] = e[i][j];
    rows.push_back(std::move(row));
  }
  for (int i = 0; i < n; ++i) {
    if (sgn(r1[i]) == 0 && sgn(r2[i]) == 0) {
      Vec row(n, Rat(0));
      row[i] = Rat(1);
      rows.push_back(std::move(row));
    }
  }
  return rank(rows) == n - 2;
}

IntVec primitive_combo(const Rat& wp, const IntVec& rp, const Rat& wn,
                       const IntVec& rn) {
  int n = static_cast<int>(rp.size());
  Vec w(n);
  for (int i = 0; i < n; ++i) w[i] = wp * Rat(rn[i]) - wn * Rat(rp[i]);
  return primitive_integer_vector(w);
}

}  // namespace

std::vector<IntVec> cone_extreme_rays(const Mat& e) {
  int n = e.row_count();
  std::vector<IntVec> rays;
  for (int i = 0; i < n; ++i) {
    IntVec unit(n, Int(0));
    unit[i] = 1;
    rays.push_back(std::move(unit));
  }
  for (int j = 0; j < e.col_count(); ++j) {
    std::vector<Rat> w(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) w[r] = dot_col(rays[r], e, j);
    std::vector<IntVec> next;
    std::set<IntVec> seen;
    auto push = [&](IntVec v) {
      if (seen.insert(v).second) next.push_back(std::move(v));
    };
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (w[r].is_zero()) push(rays[r]);
    for (std::size_t ip = 0; ip < rays.size(); ++ip) {
      if (!(w[ip] > Rat(0))) continue;
      for (std::size_t in = 0; in < rays.size(); ++in) {
        if (!(w[in] < Rat(0))) continue;
        if (!adjacent(rays[ip], rays[in], e, j)) continue;
        push(primitive_combo(w[ip], rays[ip], w[in], rays[in]));
      }
    }
    rays = std::move(next);
  }
  return rays;
}

ProjectedSystem project_x(const Polyhedron& pol) {
  Mat e(0, pol.q);
  for (const PolyRow& r : pol.rows) e.push_row(r.g);
  std::vector<IntVec> rays = cone_extreme_rays(e);
  ProjectedSystem sys;
  sys.p = pol.p;
  for (const IntVec& v : rays) {
    ProjRow row;
    row.d.assign(pol.p, Rat(0));
    row.rhs = Rat(0);
    for (int i = 0; i < pol.m(); ++i) {
      if (sgn(v[i]) == 0) continue;
      Rat vi{Rat(v[i])};
      for (int jx = 0; jx < pol.p; ++jx)
        row.d[jx] = row.d[jx] + vi * pol.rows[i].a[jx];
      row.rhs = row.rhs + vi * pol.rows[i].rhs;
      if (pol.rows[i].strict) row.strict = true;
    }
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

ProjectedSystem fm_project(const Polyhedron& pol) {
  std::vector<PolyRow> rows = pol.rows;
  for (int t = 0; t < pol.q; ++t) {
    std::vector<PolyRow> zeros, pos, neg;
    for (const PolyRow& r : rows) {
      int s = r.g[t].sign();
      (s == 0 ? zeros : s > 0 ? pos : neg).push_back(r);
    }
    std::vector<PolyRow> combined = std::move(zeros);
    for (const PolyRow& ri : pos) {
      for (const PolyRow& rl : neg) {
        PolyRow nr;
        Rat wi = ri.g[t];   // > 0, weight on the negative row
        Rat wl = -rl.g[t];  // > 0, weight on the positive row
        nr.a.resize(pol.p);
        nr.g.resize(pol.q);
        for (int jx = 0; jx < pol.p; ++jx)
          nr.a[jx] = wi * rl.a[jx] + wl * ri.a[jx];
        for (int jy = 0; jy < pol.q; ++jy)
          nr.g[jy] = wi * rl.g[jy] + wl * ri.g[jy];
        nr.rhs = wi * rl.rhs + wl * ri.rhs;
        nr.strict = ri.strict || rl.strict;
        assert(nr.g[t].is_zero());
        combined.push_back(std::move(nr));
      }
    }
    rows = std::move(combined);
  }
  ProjectedSystem sys;
  sys.p = pol.p;
  for (const PolyRow& r : rows) {
    ProjRow row;
    row.d = r.a;
    row.rhs = r.rhs;
    row.strict = r.strict;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

Polyhedron polyhedron_of(const ProjectedSystem& sys) {
  Polyhedron pol;
  pol.p = sys.p;
  pol.q = 0;
  for (const ProjRow& r : sys.rows) {
    PolyRow row;
    row.a = r.d;
    row.rhs = r.rhs;
    row.strict = r.strict;
    pol.rows.push_back(std::move(row));
  }
  return pol;
}

namespace {

bool rows_valid_for(const ProjectedSystem& sys, const ProjectedSystem& over) {
  Polyhedron pol = polyhedron_of(over);
  for (const ProjRow& row : sys.rows) {
    LpResult lp = solve_lp(pol, row.d, Vec{});
    if (lp.status == LpStatus::Infeasible) return true;  // empty set
    if (lp.status == LpStatus::Unbounded) return false;
    if (!(lp.value <= row.rhs)) return false;
  }
  return true;
}

}  // namespace

bool poly_equal(const ProjectedSystem& s1, const ProjectedSystem& s2) {
  if (s1.p != s2.p) return false;
  return rows_valid_for(s2, s1) && rows_valid_for(s1, s2);
}

}  // namespace kcut
