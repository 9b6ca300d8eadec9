#pragma once

#include <optional>
#include <vector>

#include "kcut/linalg.hpp"
#include "kcut/model.hpp"

namespace kcut {

// Terms d_i . x <= delta_i with integer data; a point of Z^p is covered when
// it satisfies at least one term.
struct Disjunction {
  int p = 0;
  std::vector<IntVec> d;
  std::vector<Int> delta;
  int k() const { return static_cast<int>(d.size()); }
  bool operator==(const Disjunction&) const = default;
};

struct DisjunctionVerdict {
  enum class Kind { Valid, Invalid, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<IntVec> witness;  // an uncovered integer point, when Invalid
};

enum class RoundingMode { Weak, Strict };

struct ObjectiveCutRay {
  IntVec v;                    // multiplier on the rows plus the objective
  IntVec d;                    // term normal
  Int delta;                   // term threshold
  std::optional<Rat> gamma_r;  // objective bound, when the last weight is > 0
};

struct ObjectiveCutReport {
  Rat gamma_star;
  RoundingMode mode = RoundingMode::Weak;
  Rat gamma_hat;
  Cut cut;
  std::vector<ObjectiveCutRay> rays;
  Disjunction disjunction;
};

// Decides whether every integer point satisfies some term. The uncovered
// region {x : d_i . x >= delta_i + 1 for all i} is boxed by LPs; an empty or
// bounded region is decided exactly, an unbounded one is scanned over
// [-bound, bound]^p and reported Inconclusive when that scan finds nothing.
// Scans are capped at a few million points and fall back to Inconclusive.
DisjunctionVerdict is_valid_disjunction(const Disjunction& dis,
                                        const Int& bound);

// True iff the cut is valid on P intersected with each term of the
// disjunction: per term, the cut's objective is maximized by an LP and must
// stay within gamma (an empty intersection passes, an unbounded one fails).
bool certify_cut(const Polyhedron& pol, const Cut& cut, const Disjunction& dis);

// Recovers a disjunction certifying a violated cut: the region of P strictly
// beyond the cut is projected onto x, and each projected row is flipped into
// the term its integer violators must satisfy. Throws when the cut is not
// violated by the LP relaxation or when fewer than two terms remain.
Disjunction disjunction_from_cut(const Polyhedron& pol, const Cut& cut);

// Objective-direction disjunction and cut at level gamma_star: every extreme
// ray of {v >= 0 : v^T (G over -h) = 0} yields a term on x whose threshold
// rounds v.(b, -gamma_star); rays weighting the objective give candidate
// bounds whose maximum is gamma_hat, and the cut is c.x + h.y <= gamma_hat.
// Throws when no ray weights the objective.
ObjectiveCutReport objective_cut(const MilpInstance& inst,
                                 const Rat& gamma_star, RoundingMode mode);

}  // namespace kcut
