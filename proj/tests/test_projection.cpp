#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "kcut/linalg.hpp"
#include "kcut/model.hpp"
#include "kcut/projection.hpp"
#include "kcut/simplex.hpp"
#include "util.hpp"

using namespace kcut;
using namespace kcut::testutil;
using kcut::testgen::random_poly;

namespace {

Polyhedron poly(int p, int q, std::initializer_list<const char*> rows_a,
                std::initializer_list<const char*> rows_g,
                std::initializer_list<const char*> rhs) {
  Polyhedron pol;
  pol.p = p;
  pol.q = q;
  auto ia = rows_a.begin();
  auto ig = rows_g.begin();
  auto ir = rhs.begin();
  for (; ia != rows_a.end(); ++ia, ++ig, ++ir)
    pol.rows.push_back(PolyRow{rv(*ia), rv(*ig), R(*ir), false});
  return pol;
}

bool in_projection(const ProjectedSystem& sys, const Vec& x) {
  for (const ProjRow& row : sys.rows) {
    Rat lhs = dot(row.d, x);
    if (row.strict ? !(lhs < row.rhs) : !(lhs <= row.rhs)) return false;
  }
  return true;
}

bool face_feasible(const Polyhedron& pol, const Vec& x) {
  Polyhedron pinned = pol;
  for (int j = 0; j < pol.p; ++j) {
    Vec up(pol.p, Rat(0)), dn(pol.p, Rat(0));
    up[j] = Rat(1);
    dn[j] = Rat(-1);
    pinned.rows.push_back(PolyRow{up, Vec(pol.q, Rat(0)), x[j], false});
    pinned.rows.push_back(PolyRow{dn, Vec(pol.q, Rat(0)), -x[j], false});
  }
  return solve_lp(pinned, Vec(pol.p, Rat(0)), Vec(pol.q, Rat(0))).status !=
         LpStatus::Infeasible;
}

}  // namespace

TEST_CASE("extreme rays of small multiplier cones") {
  // no equations: the orthant's own unit rays
  std::vector<IntVec> orthant = cone_extreme_rays(Mat(3, 0));
  REQUIRE(orthant.size() == 3);
  CHECK(orthant[0] == zv("1 0 0"));
  CHECK(orthant[1] == zv("0 1 0"));
  CHECK(orthant[2] == zv("0 0 1"));

  // one balanced pair
  std::vector<IntVec> pair = cone_extreme_rays(Mat{rv("1"), rv("-1")});
  REQUIRE(pair.size() == 1);
  CHECK(pair[0] == zv("1 1"));

  // a zero row passes through, a 2:1 pair is scaled to primitive form
  std::vector<IntVec> mixed = cone_extreme_rays(Mat{rv("0"), rv("1"), rv("-2")});
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0] == zv("1 0 0"));
  CHECK(mixed[1] == zv("0 2 1"));

  // two independent equations decouple
  std::vector<IntVec> two = cone_extreme_rays(
      Mat{rv("1 0"), rv("-1 0"), rv("0 1"), rv("0 -1")});
  REQUIRE(two.size() == 2);
  CHECK(two[0] == zv("1 1 0 0"));
  CHECK(two[1] == zv("0 0 1 1"));

  // three sources against one sink
  std::vector<IntVec> fan =
      cone_extreme_rays(Mat{rv("1"), rv("1"), rv("1"), rv("-1")});
  REQUIRE(fan.size() == 3);
  CHECK(fan[0] == zv("1 0 0 1"));
  CHECK(fan[1] == zv("0 1 0 1"));
  CHECK(fan[2] == zv("0 0 1 1"));

  // all positive: only the origin
  CHECK(cone_extreme_rays(Mat{rv("1"), rv("2")}).empty());
}

TEST_CASE("projecting the level set of the mixed fixture") {
  Polyhedron pol = poly(2, 1, {"-1 0", "0 -1", "1 1", "0 0"},
                        {"1", "1", "1", "-1"}, {"0", "0", "2", "-2/5"});
  ProjectedSystem sys = project_x(pol);
  CHECK(sys.p == 2);
  REQUIRE(sys.rows.size() == 3);
  CHECK(sys.rows[0].d == rv("-1 0"));
  CHECK(sys.rows[0].rhs == R("-2/5"));
  CHECK(!sys.rows[0].strict);
  CHECK(sys.rows[1].d == rv("0 -1"));
  CHECK(sys.rows[1].rhs == R("-2/5"));
  CHECK(sys.rows[2].d == rv("1 1"));
  CHECK(sys.rows[2].rhs == R("8/5"));

  // the eliminator agrees
  CHECK(poly_equal(sys, fm_project(pol)));
}

TEST_CASE("projection with no continuous block is the identity") {
  Polyhedron pol = poly(2, 0, {"1 2", "-1 0"}, {"", ""}, {"3", "0"});
  ProjectedSystem sys = project_x(pol);
  REQUIRE(sys.rows.size() == 2);
  CHECK(sys.rows[0].d == rv("1 2"));
  CHECK(sys.rows[0].rhs == Rat(3));
  CHECK(sys.rows[1].d == rv("-1 0"));
  CHECK(sys.rows[1].rhs == Rat(0));

  ProjectedSystem fm = fm_project(pol);
  REQUIRE(fm.rows.size() == 2);
  CHECK(poly_equal(sys, fm));
}

TEST_CASE("strictness propagates exactly through positive weights") {
  Polyhedron pol;
  pol.p = 1;
  pol.q = 1;
  pol.rows.push_back(PolyRow{rv("1"), rv("1"), Rat(1), true});
  pol.rows.push_back(PolyRow{rv("0"), rv("-1"), Rat(0), false});
  pol.rows.push_back(PolyRow{rv("-1"), rv("0"), Rat(0), false});

  ProjectedSystem sys = project_x(pol);
  bool saw_strict = false, saw_loose = false;
  for (const ProjRow& row : sys.rows) {
    if (is_zero(row.d)) continue;
    if (row.d == rv("1")) {
      // combines the strict row with y >= 0
      CHECK(row.rhs == Rat(1));
      CHECK(row.strict);
      saw_strict = true;
    }
    if (row.d == rv("-1")) {
      // copied straight from the loose input row
      CHECK(row.rhs == Rat(0));
      CHECK(!row.strict);
      saw_loose = true;
    }
  }
  CHECK(saw_strict);
  CHECK(saw_loose);
}

TEST_CASE("set equality checks closures, not row lists") {
  ProjectedSystem a{1, {ProjRow{rv("1"), Rat(1), false}}};
  ProjectedSystem b{1, {ProjRow{rv("1"), Rat(1), false},
                        ProjRow{rv("2"), Rat(2), false}}};
  ProjectedSystem c{1, {ProjRow{rv("1"), Rat(2), false}}};
  CHECK(poly_equal(a, b));
  CHECK(poly_equal(b, a));
  CHECK(!poly_equal(a, c));
  CHECK(!poly_equal(c, a));

  ProjectedSystem empty1{
      1, {ProjRow{rv("1"), Rat(0), false}, ProjRow{rv("-1"), Rat(-1), false}}};
  ProjectedSystem empty2{
      1, {ProjRow{rv("1"), Rat(-5), false}, ProjRow{rv("-1"), Rat(3), false}}};
  CHECK(poly_equal(empty1, empty2));
}

TEST_CASE("both projections agree on random systems") {
  std::mt19937_64 rng(117711);
  for (int iter = 0; iter < 40; ++iter) {
    Polyhedron pol = random_poly(rng, 3, 3, 6, 5);
    CAPTURE(iter);
    CHECK(poly_equal(project_x(pol), fm_project(pol)));
  }
}

TEST_CASE("the projected system captures exactly the feasible shadows") {
  std::mt19937_64 rng(5150);
  for (int iter = 0; iter < 20; ++iter) {
    Polyhedron pol = random_poly(rng, 2, 3, 5, 3);
    ProjectedSystem sys = project_x(pol);
    for (int u = -2; u <= 2; ++u) {
      for (int v = -2; v <= 2; ++v) {
        Vec x;
        if (pol.p == 1) {
          if (v != 0) continue;
          x = Vec{Rat(u)};
        } else {
          x = Vec{Rat(u), Rat(v)};
        }
        CAPTURE(iter);
        CAPTURE(u);
        CAPTURE(v);
        CHECK(in_projection(sys, x) == face_feasible(pol, x));
      }
    }
  }
}
