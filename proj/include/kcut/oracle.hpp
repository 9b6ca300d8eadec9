#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcut/model.hpp"
#include "kcut/solver.hpp"

namespace kcut {

struct OracleResult {
  MilpStatus status = MilpStatus::Infeasible;
  std::optional<Point> point;
  std::optional<Rat> value;
};

// Reference solver by enumeration: boxes the x variables with LPs, walks the
// integer points in ascending order, and maximizes over y per point with an
// LP. First point attaining the best value wins. Throws when the box is
// unbounded.
OracleResult oracle_solve(const MilpInstance& inst);

// Family of polytopes in n+1 variables whose facet count grows as 2^n: one
// row per sign pattern a of the first n coordinates, a.x' - (ones(a) - 1) *
// x_last <= 1, with 0 <= x_last <= 2 and a zero objective.
MilpInstance gen_expon(int n);

// Named small instances used across the tests and the command line tool.
MilpInstance builtin_instance(const std::string& name);
std::vector<std::string> builtin_names();

struct VertexSet {
  std::vector<Vec> vertices;  // sorted lexicographically
  bool bounded = true;
};

// Vertices of {x : rows}, q must be 0. The polyhedron is homogenized into a
// cone, whose extreme rays are found through the double description lift
// {(u, u', s) >= 0 : M(u - u') + s = 0}; rays with positive last coordinate
// dehomogenize into vertices, others witness unboundedness.
VertexSet enumerate_vertices(const Polyhedron& pol);

}  // namespace kcut
