#pragma once

#include <optional>
#include <vector>

#include "kcut/model.hpp"

namespace kcut {

enum class MilpStatus { Optimal, Infeasible, IterationLimit };

struct SolveOptions {
  int max_outer = 200;   // objective cut rounds
  int max_inner = 500;   // mixed integer rounding rounds per objective level
  bool trace = false;
  bool include_x0 = false;  // let the objective row source cuts as well
};

struct TraceEvent {
  enum class Kind { LpSolved, GmiCut, ObjectiveCut, End };
  Kind kind = Kind::End;
  Rat value;                 // LpSolved
  Point point;               // LpSolved
  int var = -1;              // GmiCut: 0 for the objective row, else 1..p
  Cut cut;                   // GmiCut, ObjectiveCut
  Rat gamma_star, gamma_hat;  // ObjectiveCut
  int ray_count = 0;          // ObjectiveCut
  MilpStatus terminal = MilpStatus::Optimal;  // End
};

struct MilpResult {
  MilpStatus status = MilpStatus::Infeasible;
  std::optional<Point> point;
  std::optional<Rat> value;
  std::vector<TraceEvent> trace;
  int gmi_cuts = 0;
  int objective_cuts = 0;
};

// True when the LP relaxation is bounded in every coordinate direction (an
// empty relaxation counts as bounded).
bool check_bounded(const MilpInstance& inst);

// Exact optimization of max c.x + h.y with x integer: rounds of mixed
// integer rounding cuts drive the relaxation until its value drops below the
// incumbent level, then one objective-direction cut pins the level to an
// attainable bound, repeating until the relaxed optimum is integral or the
// relaxation empties. Throws on an unbounded instance. Values and points are
// reported in the units of the given instance.
MilpResult solve(const MilpInstance& inst, const SolveOptions& opt = {});

}  // namespace kcut
