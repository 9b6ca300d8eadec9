#include "kcut/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "kcut/projection.hpp"
#include "kcut/simplex.hpp"

namespace kcut {

namespace {

Rat dot_ints(const Vec& c, const IntVec& x) {
  Rat s(0);
  for (std::size_t j = 0; j < c.size(); ++j) s = s + c[j] * Rat(x[j]);
  return s;
}

bool next_point(IntVec& x, const std::vector<Int>& lo,
                const std::vector<Int>& hi) {
  int j = static_cast<int>(x.size()) - 1;
  while (j >= 0 && x[j] == hi[j]) {
    x[j] = lo[j];
    --j;
  }
  if (j < 0) return false;
  x[j] += 1;
  return true;
}

}  // namespace

OracleResult oracle_solve(const MilpInstance& inst) {
  inst.validate();
  Polyhedron pol = polyhedron_of(inst);
  std::vector<Int> lo(inst.p), hi(inst.p);
  for (int j = 0; j < inst.p; ++j) {
    Vec c(inst.p, Rat(0)), h(inst.q, Rat(0));
    c[j] = Rat(1);
    LpResult up = solve_lp(pol, c, h);
    if (up.status == LpStatus::Infeasible) return {};
    if (up.status == LpStatus::Unbounded)
      throw std::runtime_error("oracle: unbounded in an integer direction");
    hi[j] = up.value.floor();
    c[j] = Rat(-1);
    LpResult down = solve_lp(pol, c, h);
    assert(down.status == LpStatus::Optimal);
    lo[j] = (-down.value).ceil();
    if (lo[j] > hi[j]) return {};
  }

  OracleResult best;
  IntVec x(lo.begin(), lo.end());
  for (bool more = true; more; more = next_point(x, lo, hi)) {
    Rat value;
    Point pt;
    if (inst.q > 0) {
      Polyhedron ypol;
      ypol.p = 0;
      ypol.q = inst.q;
      for (int i = 0; i < inst.m(); ++i) {
        PolyRow row;
        row.g = inst.G[i];
        row.rhs = inst.b[i] - dot_ints(inst.A[i], x);
        ypol.rows.push_back(std::move(row));
      }
      LpResult lp = solve_lp(ypol, Vec{}, inst.h);
      if (lp.status == LpStatus::Infeasible) continue;
      if (lp.status == LpStatus::Unbounded)
        throw std::runtime_error("oracle: unbounded over the continuous block");
      value = dot_ints(inst.c, x) + lp.value;
      pt.y = lp.point.y;
    } else {
      bool ok = true;
      for (int i = 0; i < inst.m() && ok; ++i)
        ok = dot_ints(inst.A[i], x) <= inst.b[i];
      if (!ok) continue;
      value = dot_ints(inst.c, x);
    }
    if (best.status == MilpStatus::Optimal && !(value > *best.value)) continue;
    pt.x = vec_of(x);
    best.status = MilpStatus::Optimal;
    best.point = std::move(pt);
    best.value = std::move(value);
  }
  return best;
}

MilpInstance gen_expon(int n) {
  assert(n >= 1);
  MilpInstance inst;
  inst.p = n + 1;
  inst.q = 0;
  inst.c.assign(inst.p, Rat(0));
  inst.A = Mat(0, inst.p);
  inst.G = Mat(0, 0);
  for (long mask = 0; mask < (1L << n); ++mask) {
    Vec a(inst.p);
    int ones = 0;
    for (int i = 0; i < n; ++i) {
      bool up = (mask >> i) & 1;
      if (up) ++ones;
      a[i] = up ? Rat(1) : Rat(-1);
    }
    a[n] = Rat(-(ones - 1));
    inst.A.push_row(std::move(a));
    inst.G.push_row(Vec{});
    inst.b.push_back(Rat(1));
  }
  Vec top(inst.p, Rat(0)), bot(inst.p, Rat(0));
  top[n] = Rat(1);
  bot[n] = Rat(-1);
  inst.A.push_row(std::move(top));
  inst.G.push_row(Vec{});
  inst.b.push_back(Rat(2));
  inst.A.push_row(std::move(bot));
  inst.G.push_row(Vec{});
  inst.b.push_back(Rat(0));
  return inst;
}

MilpInstance builtin_instance(const std::string& name) {
  MilpInstance inst;
  auto row = [&](std::initializer_list<int> a, std::initializer_list<int> g,
                 int rhs) {
    Vec av, gv;
    for (int v : a) av.push_back(Rat(v));
    for (int v : g) gv.push_back(Rat(v));
    inst.A.push_row(std::move(av));
    inst.G.push_row(std::move(gv));
    inst.b.push_back(Rat(rhs));
  };
  if (name == "cks") {
    inst.p = 2;
    inst.q = 1;
    inst.c = {Rat(0), Rat(0)};
    inst.h = {Rat(1)};
    row({-1, 0}, {1}, 0);
    row({0, -1}, {1}, 0);
    row({1, 1}, {1}, 2);
    // nonnegativity rows keep every coordinate LP finite without touching
    // the relaxation optimum or the integer optimum
    row({-1, 0}, {0}, 0);
    row({0, -1}, {0}, 0);
    row({0, 0}, {-1}, 0);
    return inst;
  }
  if (name == "cone4") {
    inst.p = 2;
    inst.q = 1;
    inst.c = {Rat(0), Rat(0)};
    inst.h = {Rat(1)};
    row({-1, 0}, {1}, 0);
    row({0, -1}, {1}, 0);
    row({1, 0}, {1}, 1);
    row({0, 1}, {1}, 1);
    return inst;
  }
  if (name == "owen-mehrotra") {
    inst.p = 2;
    inst.q = 0;
    inst.c = {Rat(1), Rat(1)};
    row({8, 12}, {}, 27);
    row({8, 3}, {}, 18);
    row({-1, 0}, {}, 0);
    row({0, -1}, {}, 0);
    return inst;
  }
  throw std::runtime_error("unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"cks", "cone4", "owen-mehrotra"};
}

VertexSet enumerate_vertices(const Polyhedron& pol) {
  assert(pol.q == 0);
  int d = pol.p + 1;       // homogenized dimension
  int m = pol.m() + 1;     // rows plus the sign of the homogenizer
  std::vector<Vec> hom(m, Vec(d, Rat(0)));
  for (int i = 0; i < pol.m(); ++i) {
    for (int j = 0; j < pol.p; ++j) hom[i][j] = pol.rows[i].a[j];
    hom[i][pol.p] = -pol.rows[i].rhs;
  }
  hom[m - 1][pol.p] = Rat(-1);

  // Lift {w : hom . w <= 0} to {(u, u', s) >= 0 : hom (u - u') + s = 0}.
  int nvars = 2 * d + m;
  Mat e(nvars, m);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < d; ++j) {
      e[j][k] = hom[k][j];
      e[d + j][k] = -hom[k][j];
    }
    e[2 * d + k][k] = Rat(1);
  }

  std::set<IntVec> dirs;
  VertexSet out;
  std::set<Vec> verts;
  for (const IntVec& r : cone_extreme_rays(e)) {
    Vec w(d);
    bool zero = true;
    for (int j = 0; j < d; ++j) {
      w[j] = Rat(Int(r[j] - r[d + j]));
      if (!w[j].is_zero()) zero = false;
    }
    if (zero) continue;
    if (!dirs.insert(primitive_integer_vector(w)).second) continue;
    std::vector<Vec> active;
    for (int k = 0; k < m; ++k)
      if (dot(hom[k], w).is_zero()) active.push_back(hom[k]);
    if (rank(active) != d - 1) continue;  // not an extreme direction
    if (w[pol.p].sign() > 0) {
      Vec x(pol.p);
      for (int j = 0; j < pol.p; ++j) x[j] = w[j] / w[pol.p];
      verts.insert(std::move(x));
    } else {
      out.bounded = false;
    }
  }
  out.vertices.assign(verts.begin(), verts.end());
  return out;
}

}  // namespace kcut
