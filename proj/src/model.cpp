#include "kcut/model.hpp"

#include <stdexcept>

namespace kcut {

void MilpInstance::validate() const {
  if (p < 0 || q < 0) throw std::invalid_argument("negative dimension");
  if (A.row_count() != G.row_count() || A.row_count() != static_cast<int>(b.size()))
    throw std::invalid_argument("row count mismatch");
  if ((A.row_count() > 0 && A.col_count() != p) || static_cast<int>(c.size()) != p)
    throw std::invalid_argument("x dimension mismatch");
  if ((G.row_count() > 0 && G.col_count() != q) || static_cast<int>(h.size()) != q)
    throw std::invalid_argument("y dimension mismatch");
}

Polyhedron polyhedron_of(const MilpInstance& inst) {
  inst.validate();
  Polyhedron pol{inst.p, inst.q, {}};
  for (int i = 0; i < inst.m(); ++i)
    pol.rows.push_back(PolyRow{inst.A[i], inst.G[i], inst.b[i], false});
  return pol;
}

MilpInstance instance_of(const Polyhedron& pol, const Vec& c, const Vec& h) {
  MilpInstance inst;
  inst.p = pol.p;
  inst.q = pol.q;
  inst.A = Mat(0, pol.p);
  inst.G = Mat(0, pol.q);
  inst.c = c;
  inst.h = h;
  for (const PolyRow& r : pol.rows) {
    inst.A.push_row(r.a);
    inst.G.push_row(r.g);
    inst.b.push_back(r.rhs);
  }
  inst.validate();
  return inst;
}

ScaledInstance scale_to_integer_data(const MilpInstance& inst) {
  inst.validate();
  MilpInstance out = inst;
  for (int i = 0; i < inst.m(); ++i) {
    Int l(1);
    for (const Rat& x : inst.A[i]) l = lcm(l, x.den());
    for (const Rat& x : inst.G[i]) l = lcm(l, x.den());
    l = lcm(l, inst.b[i].den());
    Rat f{l};
    out.A[i] = scaled(inst.A[i], f);
    out.G[i] = scaled(inst.G[i], f);
    out.b[i] = inst.b[i] * f;
  }
  Int mult(1);
  for (const Rat& x : inst.c) mult = lcm(mult, x.den());
  Rat f{mult};
  out.c = scaled(inst.c, f);
  out.h = scaled(inst.h, f);
  return ScaledInstance{out, mult};
}

bool is_integer_point(const Point& pt) {
  return all_integer(pt.x);
}

Rat row_value(const PolyRow& row, const Point& pt) {
  return dot(row.a, pt.x) + dot(row.g, pt.y);
}

bool row_satisfied(const PolyRow& row, const Point& pt) {
  return row_value(row, pt) <= row.rhs;
}

Rat objective_value(const Vec& c, const Vec& h, const Point& pt) {
  return dot(c, pt.x) + dot(h, pt.y);
}

void add_cut(Polyhedron& pol, const Cut& cut) {
  if (static_cast<int>(cut.alpha.size()) != pol.p ||
      static_cast<int>(cut.beta.size()) != pol.q)
    throw std::invalid_argument("cut dimension mismatch");
  pol.rows.push_back(row_of_cut(cut));
}

PolyRow row_of_cut(const Cut& cut) {
  return PolyRow{cut.alpha, cut.beta, cut.gamma, false};
}

Cut normalized(const Cut& cut) {
  // primitive_integer_vector applies a positive scale only, so orientation
  // is preserved and two cuts agree iff they are positive multiples.
  Vec all = concat(concat(cut.alpha, cut.beta), Vec{cut.gamma});
  IntVec prim = primitive_integer_vector(all);
  Cut out;
  out.alpha = vec_of(IntVec(prim.begin(), prim.begin() + cut.alpha.size()));
  out.beta = vec_of(IntVec(prim.begin() + cut.alpha.size(), prim.end() - 1));
  out.gamma = Rat(prim.back());
  return out;
}

}  // namespace kcut
