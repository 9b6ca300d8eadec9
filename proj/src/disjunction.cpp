#include "kcut/disjunction.hpp"

#include <cassert>
#include <set>
#include <stdexcept>
#include <utility>

#include "kcut/projection.hpp"
#include "kcut/simplex.hpp"

namespace kcut {

namespace {

constexpr long kScanCap = 5000000;

// Uncovered region of a disjunction: every term violated strictly, over
// integers d.x >= delta + 1.
Polyhedron uncovered_body(const Disjunction& dis) {
  Polyhedron body;
  body.p = dis.p;
  body.q = 0;
  for (int i = 0; i < dis.k(); ++i) {
    PolyRow row;
    row.a.resize(dis.p);
    for (int j = 0; j < dis.p; ++j) row.a[j] = Rat(Int(-dis.d[i][j]));
    row.rhs = Rat(Int(-dis.delta[i] - 1));
    body.rows.push_back(std::move(row));
  }
  return body;
}

bool uncovered(const Disjunction& dis, const IntVec& x) {
  for (int i = 0; i < dis.k(); ++i) {
    Int v(0);
    for (int j = 0; j < dis.p; ++j) v += dis.d[i][j] * x[j];
    if (v <= dis.delta[i]) return false;  // term i covers x
  }
  return true;
}

// Walks integer points of the box in ascending lexicographic order until the
// callback returns true; returns that point.
std::optional<IntVec> scan_box(const std::vector<Int>& lo,
                               const std::vector<Int>& hi,
                               const Disjunction& dis) {
  int p = static_cast<int>(lo.size());
  for (int j = 0; j < p; ++j)
    if (lo[j] > hi[j]) return std::nullopt;
  IntVec x(lo.begin(), lo.end());
  for (;;) {
    if (uncovered(dis, x)) return x;
    int j = p - 1;
    while (j >= 0 && x[j] == hi[j]) {
      x[j] = lo[j];
      --j;
    }
    if (j < 0) return std::nullopt;
    x[j] += 1;
  }
}

bool box_too_large(const std::vector<Int>& lo, const std::vector<Int>& hi) {
  Int total(1);
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (lo[j] > hi[j]) return false;
    total *= hi[j] - lo[j] + 1;
    if (total > kScanCap) return true;
  }
  return false;
}

}  // namespace

DisjunctionVerdict is_valid_disjunction(const Disjunction& dis,
                                        const Int& bound) {
  assert(dis.p >= 1 && dis.k() >= 1);
  Polyhedron body = uncovered_body(dis);
  std::vector<Int> lo(dis.p), hi(dis.p);
  bool unbounded = false;
  for (int j = 0; j < dis.p && !unbounded; ++j) {
    Vec dir(dis.p, Rat(0));
    dir[j] = Rat(1);
    LpResult up = solve_lp(body, dir, Vec{});
    if (up.status == LpStatus::Infeasible)
      return {DisjunctionVerdict::Kind::Valid, std::nullopt};
    if (up.status == LpStatus::Unbounded) {
      unbounded = true;
      break;
    }
    hi[j] = up.value.floor();
    dir[j] = Rat(-1);
    LpResult down = solve_lp(body, dir, Vec{});
    if (down.status == LpStatus::Unbounded) {
      unbounded = true;
      break;
    }
    assert(down.status == LpStatus::Optimal);  // nonempty by the max above
    lo[j] = (-down.value).ceil();
  }
  if (unbounded) {
    std::vector<Int> blo(dis.p, -bound), bhi(dis.p, bound);
    if (!box_too_large(blo, bhi)) {
      if (auto w = scan_box(blo, bhi, dis))
        return {DisjunctionVerdict::Kind::Invalid, std::move(w)};
    }
    return {DisjunctionVerdict::Kind::Inconclusive, std::nullopt};
  }
  if (box_too_large(lo, hi))
    return {DisjunctionVerdict::Kind::Inconclusive, std::nullopt};
  if (auto w = scan_box(lo, hi, dis))
    return {DisjunctionVerdict::Kind::Invalid, std::move(w)};
  return {DisjunctionVerdict::Kind::Valid, std::nullopt};
}

bool certify_cut(const Polyhedron& pol, const Cut& cut,
                 const Disjunction& dis) {
  assert(dis.p == pol.p);
  for (int i = 0; i < dis.k(); ++i) {
    Polyhedron piece = pol;
    PolyRow term;
    term.a.resize(pol.p);
    for (int j = 0; j < pol.p; ++j) term.a[j] = Rat(dis.d[i][j]);
    term.g.assign(pol.q, Rat(0));
    term.rhs = Rat(dis.delta[i]);
    piece.rows.push_back(std::move(term));
    LpResult lp = solve_lp(piece, cut.alpha, cut.beta);
    if (lp.status == LpStatus::Infeasible) continue;
    if (lp.status != LpStatus::Optimal) return false;
    if (!(lp.value <= cut.gamma)) return false;
  }
  return true;
}

Disjunction disjunction_from_cut(const Polyhedron& pol, const Cut& cut) {
  LpResult lp = solve_lp(pol, cut.alpha, cut.beta);
  bool violated = lp.status == LpStatus::Unbounded ||
                  (lp.status == LpStatus::Optimal && lp.value > cut.gamma);
  if (!violated)
    throw std::runtime_error("cut not violated by the LP relaxation");

  Polyhedron beyond = pol;
  PolyRow sep;
  sep.a.resize(pol.p);
  sep.g.resize(pol.q);
  for (int j = 0; j < pol.p; ++j) sep.a[j] = -cut.alpha[j];
  for (int j = 0; j < pol.q; ++j) sep.g[j] = -cut.beta[j];
  sep.rhs = -cut.gamma;
  sep.strict = true;
  beyond.rows.push_back(std::move(sep));

  ProjectedSystem sys = project_x(beyond);
  Disjunction dis;
  dis.p = pol.p;
  std::set<std::pair<IntVec, Int>> seen;
  for (const ProjRow& row : sys.rows) {
    if (is_zero(row.d)) continue;
    IntVec prim = primitive_integer_vector(row.d);
    int nz = 0;
    while (row.d[nz].is_zero()) ++nz;
    Rat lambda = Rat(prim[nz]) / row.d[nz];
    Rat rhs = lambda * row.rhs;
    Int thresh = row.strict ? rhs.ceil() : Int(rhs.floor() + 1);
    IntVec term(prim.size());
    for (std::size_t j = 0; j < prim.size(); ++j) term[j] = -prim[j];
    Int delta = -thresh;
    if (!seen.emplace(term, delta).second) continue;
    dis.d.push_back(std::move(term));
    dis.delta.push_back(std::move(delta));
  }
  if (dis.k() < 2) throw std::runtime_error("no disjunction derivable");
  return dis;
}

ObjectiveCutReport objective_cut(const MilpInstance& inst,
                                 const Rat& gamma_star, RoundingMode mode) {
  inst.validate();
  ScaledInstance sc = scale_to_integer_data(inst);
  const MilpInstance& si = sc.instance;
  Rat mult{sc.objective_multiplier};
  Rat gs = gamma_star * mult;
  int m = si.m();

  Mat e(0, si.q);
  for (int i = 0; i < m; ++i) e.push_row(si.G[i]);
  Vec negh(si.q);
  for (int j = 0; j < si.q; ++j) negh[j] = -si.h[j];
  e.push_row(negh);

  ObjectiveCutReport rep;
  rep.gamma_star = gamma_star;
  rep.mode = mode;
  std::optional<Rat> best;
  std::set<std::pair<IntVec, Int>> seen;
  for (const IntVec& v : cone_extreme_rays(e)) {
    ObjectiveCutRay ray;
    ray.v = v;
    Rat vb(0);
    ray.d.resize(si.p);
    for (int j = 0; j < si.p; ++j) {
      Rat dj = -Rat(v[m]) * si.c[j];
      for (int i = 0; i < m; ++i) dj = dj + Rat(v[i]) * si.A[i][j];
      assert(dj.is_integer());
      ray.d[j] = dj.num();
    }
    for (int i = 0; i < m; ++i) vb = vb + Rat(v[i]) * si.b[i];
    Rat base = vb - Rat(v[m]) * gs;
    ray.delta = mode == RoundingMode::Weak ? base.ceil() : Int(base.floor() + 1);
    if (sgn(v[m]) > 0) {
      Rat gr = (Rat(ray.delta) - vb) / Rat(Int(-v[m]));
      ray.gamma_r = gr / mult;
      if (!best || gr > *best) best = gr;
    }
    IntVec term(ray.d.size());
    for (std::size_t j = 0; j < ray.d.size(); ++j) term[j] = -ray.d[j];
    Int delta = -ray.delta;
    if (seen.emplace(term, delta).second) {
      rep.disjunction.d.push_back(std::move(term));
      rep.disjunction.delta.push_back(std::move(delta));
    }
    rep.rays.push_back(std::move(ray));
  }
  if (!best) throw std::runtime_error("objective cut unavailable");
  rep.disjunction.p = si.p;
  rep.gamma_hat = *best / mult;
  rep.cut.alpha = inst.c;
  rep.cut.beta = inst.h;
  rep.cut.gamma = rep.gamma_hat;
  return rep;
}

}  // namespace kcut
