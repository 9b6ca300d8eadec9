#pragma once

#include <cassert>
#include <random>
#include <stdexcept>
#include <vector>

#include "kcut/model.hpp"
#include "kcut/simplex.hpp"

namespace kcut::testgen {

// Deterministic across platforms: raw engine output only, no distributions.
inline int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Vec random_vec(std::mt19937_64& rng, int n, int bound) {
  Vec v;
  for (int i = 0; i < n; ++i) v.push_back(Rat(pick(rng, -bound, bound)));
  return v;
}

// Random inequality system, possibly empty or unbounded.
inline Polyhedron random_poly(std::mt19937_64& rng, int pmax, int qmax,
                              int mmax, int bound) {
  Polyhedron pol;
  pol.p = pick(rng, 1, pmax);
  pol.q = pick(rng, 0, qmax);
  int m = pick(rng, 0, mmax);
  for (int i = 0; i < m; ++i) {
    PolyRow row;
    row.a = random_vec(rng, pol.p, bound);
    row.g = random_vec(rng, pol.q, bound);
    row.rhs = Rat(pick(rng, -bound, bound));
    pol.rows.push_back(std::move(row));
  }
  return pol;
}

// Random instance wrapped in an explicit box, so every coordinate LP is
// finite by construction.
inline MilpInstance random_boxed_milp(std::mt19937_64& rng, int pmax, int qmax,
                                      int mmax, int bound, int box) {
  MilpInstance inst;
  inst.p = pick(rng, 1, pmax);
  inst.q = pick(rng, 0, qmax);
  inst.A = Mat(0, inst.p);
  inst.G = Mat(0, inst.q);
  inst.c = random_vec(rng, inst.p, bound);
  inst.h = random_vec(rng, inst.q, bound);
  int m = pick(rng, 0, mmax);
  auto push = [&](Vec a, Vec g, Rat rhs) {
    inst.A.push_row(std::move(a));
    inst.G.push_row(std::move(g));
    inst.b.push_back(rhs);
  };
  for (int i = 0; i < m; ++i)
    push(random_vec(rng, inst.p, bound), random_vec(rng, inst.q, bound),
         Rat(pick(rng, -bound, bound)));
  for (int j = 0; j < inst.p + inst.q; ++j) {
    for (int s : {1, -1}) {
      Vec a(inst.p, Rat(0)), g(inst.q, Rat(0));
      (j < inst.p ? a[j] : g[j - inst.p]) = Rat(s);
      push(std::move(a), std::move(g), Rat(box));
    }
  }
  return inst;
}

// Integer range of one x coordinate over the relaxation, empty when the
// relaxation is.
struct XBox {
  bool feasible = true;
  std::vector<Int> lo, hi;
};

inline XBox x_box(const MilpInstance& inst) {
  XBox out;
  Polyhedron pol = polyhedron_of(inst);
  for (int j = 0; j < inst.p; ++j) {
    Vec c(inst.p, Rat(0)), h(inst.q, Rat(0));
    c[j] = Rat(1);
    LpResult up = solve_lp(pol, c, h);
    if (up.status == LpStatus::Infeasible) {
      out.feasible = false;
      return out;
    }
    if (up.status != LpStatus::Optimal)
      throw std::runtime_error("corpus: unbounded box");
    c[j] = Rat(-1);
    LpResult dn = solve_lp(pol, c, h);
    if (dn.status != LpStatus::Optimal)
      throw std::runtime_error("corpus: unbounded box");
    out.lo.push_back((-dn.value).ceil());
    out.hi.push_back(up.value.floor());
  }
  return out;
}

// All feasible mixed points the enumeration reference would visit: every
// integer x in the coordinate box, with the y part maximizing h.y there.
inline std::vector<Point> enumerate_feasible(const MilpInstance& inst) {
  std::vector<Point> out;
  XBox box = x_box(inst);
  if (!box.feasible) return out;
  for (int j = 0; j < inst.p; ++j)
    if (box.lo[j] > box.hi[j]) return out;
  std::vector<Int> cur = box.lo;
  for (;;) {
    Polyhedron face = polyhedron_of(inst);
    for (int j = 0; j < inst.p; ++j) {
      Vec a(inst.p, Rat(0));
      a[j] = Rat(1);
      face.rows.push_back(PolyRow{a, Vec(inst.q, Rat(0)), Rat(cur[j]), false});
      a[j] = Rat(-1);
      face.rows.push_back(PolyRow{a, Vec(inst.q, Rat(0)), Rat(-cur[j]), false});
    }
    LpResult lp = solve_lp(face, Vec(inst.p, Rat(0)), inst.h);
    if (lp.status == LpStatus::Optimal) {
      Vec x;
      for (const Int& v : cur) x.push_back(Rat(v));
      out.push_back(Point{std::move(x), lp.point.y});
    } else if (lp.status == LpStatus::Unbounded) {
      throw std::runtime_error("corpus: unbounded face");
    }
    int j = inst.p - 1;
    while (j >= 0 && cur[j] == box.hi[j]) {
      cur[j] = box.lo[j];
      --j;
    }
    if (j < 0) break;
    cur[j] += 1;
  }
  return out;
}

inline bool cut_holds_at(const Cut& cut, const Point& pt) {
  return dot(cut.alpha, pt.x) + dot(cut.beta, pt.y) <= cut.gamma;
}

}  // namespace kcut::testgen
