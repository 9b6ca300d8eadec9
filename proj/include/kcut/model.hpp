#pragma once

#include <vector>

#include "kcut/linalg.hpp"

namespace kcut {

// max c.x + h.y  s.t.  A x + G y <= b,  x integer, y continuous.
// Variables are free apart from the integrality of x; bounds, when wanted,
// are ordinary rows.
struct MilpInstance {
  int p = 0;  // integer variables x_1..x_p
  int q = 0;  // continuous variables y_1..y_q
  Mat A;      // m x p
  Mat G;      // m x q
  Vec b;      // m
  Vec c;      // p
  Vec h;      // q

  int m() const { return A.row_count(); }
  void validate() const;  // throws on shape mismatch

  friend bool operator==(const MilpInstance&, const MilpInstance&) = default;
};

// One inequality a.x + g.y <= rhs (or < rhs when strict).
struct PolyRow {
  Vec a;
  Vec g;
  Rat rhs;
  bool strict = false;

  friend bool operator==(const PolyRow&, const PolyRow&) = default;
};

struct Polyhedron {
  int p = 0;
  int q = 0;
  std::vector<PolyRow> rows;

  int m() const { return static_cast<int>(rows.size()); }

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;
};

struct Point {
  Vec x;
  Vec y;

  friend bool operator==(const Point&, const Point&) = default;
};

// Inequality alpha.x + beta.y <= gamma intended as a cutting plane.
struct Cut {
  Vec alpha;
  Vec beta;
  Rat gamma;

  friend bool operator==(const Cut&, const Cut&) = default;
};

Polyhedron polyhedron_of(const MilpInstance& inst);
MilpInstance instance_of(const Polyhedron& pol, const Vec& c, const Vec& h);

struct ScaledInstance {
  MilpInstance instance;
  Int objective_multiplier;  // positive; scaled value = multiplier * original
};

// Multiplies every constraint row by the lcm of its denominators so that all
// A, G, b entries are integers, and the objective pair (c, h) by the positive
// integer that clears the denominators of c. The feasible set is unchanged.
ScaledInstance scale_to_integer_data(const MilpInstance& inst);

bool is_integer_point(const Point& pt);  // integrality of the x part only

Rat row_value(const PolyRow& row, const Point& pt);
bool row_satisfied(const PolyRow& row, const Point& pt);  // closed form, <=
Rat objective_value(const Vec& c, const Vec& h, const Point& pt);

void add_cut(Polyhedron& pol, const Cut& cut);
PolyRow row_of_cut(const Cut& cut);

// Canonical representative of a cut under positive scaling: integer entries
// across (alpha, beta, gamma) with overall gcd 1.
Cut normalized(const Cut& cut);

}  // namespace kcut
