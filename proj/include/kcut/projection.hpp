#pragma once

#include <vector>

#include "kcut/linalg.hpp"
#include "kcut/model.hpp"

namespace kcut {

// Extreme rays of {v >= 0 : v . col_j(E) = 0 for every column j}, where v
// ranges over Q^N with N = E.row_count(). Double description: start from the
// unit rays of the orthant and impose one equation at a time, combining
// adjacent rays across the hyperplane. Rays come back as primitive integer
// vectors, deduplicated, in a deterministic order.
std::vector<IntVec> cone_extreme_rays(const Mat& E);

struct ProjRow {
  Vec d;
  Rat rhs;
  bool strict = false;
};

struct ProjectedSystem {
  int p = 0;
  std::vector<ProjRow> rows;
};

// Projection of {(x, y) : rows} onto the x variables, computed from the
// extreme rays of the multiplier cone {v >= 0 : v^T G = 0}. A projected row
// is strict when any strict input row enters it with positive weight.
ProjectedSystem project_x(const Polyhedron& pol);

// Same projection by Fourier-Motzkin elimination of the y variables in
// ascending order. Redundant rows are kept.
ProjectedSystem fm_project(const Polyhedron& pol);

Polyhedron polyhedron_of(const ProjectedSystem& sys);

// Set equality of the closures: every row of each system must be valid for
// the other (checked by one LP per row). Strict flags are ignored.
bool poly_equal(const ProjectedSystem& s1, const ProjectedSystem& s2);

}  // namespace kcut
