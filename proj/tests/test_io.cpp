#include <stdexcept>
#include <string>

#include "doctest.h"
#include "kcut/io.hpp"
#include "kcut/oracle.hpp"
#include "util.hpp"

using namespace kcut;
using namespace kcut::testutil;

namespace {

const char* kCksText = R"(milp p 2 q 1
maximize 0 0 | 1
st
-1 0 | 1 <= 0
0 -1 | 1 <= 0
1 1 | 1 <= 2
end
)";

}  // namespace

TEST_CASE("a three row mixed instance parses exactly") {
  MilpInstance inst = parse_milp(std::string(kCksText));
  CHECK(inst.p == 2);
  CHECK(inst.q == 1);
  CHECK(inst.m() == 3);
  CHECK(inst.c == rv("0 0"));
  CHECK(inst.h == rv("1"));
  CHECK(inst.A[0] == rv("-1 0"));
  CHECK(inst.G[0] == rv("1"));
  CHECK(inst.b == rv("0 0 2"));
  CHECK(inst.A[2] == rv("1 1"));
}

TEST_CASE("comments, blank lines and rationals are accepted") {
  MilpInstance inst = parse_milp(
      "# leading note\n"
      "milp p 1 q 1\n"
      "\n"
      "maximize -1/2 | 3   # trailing note\n"
      "st\n"
      "  2/3 | -4 <= 5/6\n"
      "end\n");
  CHECK(inst.c == rv("-1/2"));
  CHECK(inst.h == rv("3"));
  CHECK(inst.A[0] == rv("2/3"));
  CHECK(inst.G[0] == rv("-4"));
  CHECK(inst.b[0] == Rat(5, 6));
}

TEST_CASE("x only instances need no continuous block") {
  MilpInstance inst = parse_milp("milp p 1 q 0\nmaximize 1 |\nst\n2 | <= 1\nend\n");
  CHECK(inst.p == 1);
  CHECK(inst.q == 0);
  CHECK(inst.m() == 1);
  CHECK(inst.A[0] == rv("2"));
  CHECK(inst.b[0] == Rat(1));
}

TEST_CASE("rowless instances parse") {
  MilpInstance inst = parse_milp("milp p 2 q 0\nmaximize 1 1 |\nst\nend\n");
  CHECK(inst.m() == 0);
  CHECK(inst.A.col_count() == 2);
  CHECK_NOTHROW(inst.validate());
}

TEST_CASE("serialize then parse is the identity") {
  for (const char* name : {"cks", "cone4", "owen-mehrotra"}) {
    CAPTURE(name);
    MilpInstance inst = builtin_instance(name);
    CHECK(parse_milp(serialize_milp(inst)) == inst);
  }
  MilpInstance gen = gen_expon(2);
  CHECK(parse_milp(serialize_milp(gen)) == gen);

  MilpInstance frac = parse_milp(
      "milp p 1 q 2\nmaximize -7/3 | 0 1/9\nst\n1/2 | -3 5 <= -11/4\nend\n");
  CHECK(parse_milp(serialize_milp(frac)) == frac);
}

TEST_CASE("parse then serialize is canonical") {
  std::string sloppy =
      "# padded\nmilp   p 2   q 1\nmaximize 0 0  |  1\nst\n"
      "-1 0 | 1 <= 0\n\n0 -1 | 1 <= 0\n1 1 | 1 <= 2\nend\n";
  std::string canon = serialize_milp(parse_milp(sloppy));
  CHECK(canon == serialize_milp(parse_milp(canon)));
  CHECK(parse_milp(canon) == parse_milp(sloppy));
}

TEST_CASE("milp parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_milp(std::string("milp p 2\n")),
                       "line 1: expected 'milp p <int> q <int>'",
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_milp("milp p 0 q 0\nmaximize |\nst\nend\n"),
                       "line 1: p + q must be positive", std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_milp("milp p -1 q 1\n"),
                       doctest::Contains("line 1:"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_milp("milp p 1 q 0\nminimize 1 |\nst\nend\n"),
      "line 2: expected 'maximize'", std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_milp("milp p 1 q 0\nmaximize 1\nst\nend\n"),
                       "line 2: wrong number of tokens", std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_milp("milp p 1 q 0\nmaximize 1 |\nrows\nend\n"),
                       "line 3: expected 'st'", std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_milp("milp p 1 q 0\nmaximize 1 |\nst\n2 x <= 1\nend\n"),
      "line 4: expected '|'", std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_milp("milp p 1 q 0\nmaximize 1 |\nst\n2 | == 1\nend\n"),
      "line 4: expected '<='", std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_milp("milp p 1 q 0\nmaximize 1 |\nst\n2 3 | <= 1\nend\n"),
      "line 4: wrong number of tokens", std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_milp("milp p 1 q 0\nmaximize 1 |\nst\n1/0 | <= 1\nend\n"),
      "line 4: bad rational token '1/0': zero denominator",
      std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_milp("milp p 1 q 0\nmaximize 1 |\nst\nend\nextra\n"),
      "line 5: unexpected content after 'end'", std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_milp("milp p 1 q 0\nmaximize 1 |\nst\n"),
                       "unexpected end of input", std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_milp(std::string("")),
                       "unexpected end of input", std::runtime_error);
}

TEST_CASE("disjunction files round-trip") {
  Disjunction dis;
  dis.p = 2;
  dis.d = {zv("1 0"), zv("0 1"), zv("-1 -1")};
  dis.delta = {Int(0), Int(0), Int(-2)};
  std::string text = serialize_disjunction(dis);
  CHECK(parse_disjunction(text) == dis);

  Disjunction parsed = parse_disjunction(
      "# cover note\ndis k 2 p 1\n1 <= 0\n-1 <= -2\n");
  CHECK(parsed.p == 1);
  CHECK(parsed.k() == 2);
  CHECK(parsed.d[1] == zv("-1"));
  CHECK(parsed.delta[1] == Int(-2));
}

TEST_CASE("disjunction parse errors") {
  CHECK_THROWS_WITH_AS(parse_disjunction(std::string("dis k 1 p 1\n1 <= 0\n")),
                       "line 1: k must be at least 2", std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_disjunction(std::string("dis k 2 p 0\n")),
                       "line 1: p must be positive", std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_disjunction(std::string("cut k 2 p 1\n")),
                       "line 1: expected 'dis k <int> p <int>'",
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_disjunction(std::string("dis k 2 p 1\n1/2 <= 0\n-1 <= -2\n")),
      "line 2: bad integer token '1/2'", std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_disjunction(std::string("dis k 2 p 1\n1 0 <= 0\n-1 <= -2\n")),
      "line 2: wrong number of tokens", std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_disjunction(std::string("dis k 2 p 1\n1 <= 0\n")),
                       "unexpected end of input", std::runtime_error);
  CHECK_THROWS_WITH_AS(
      parse_disjunction(std::string("dis k 2 p 1\n1 <= 0\n-1 <= -2\nmore\n")),
      "line 4: unexpected trailing content", std::runtime_error);
}

TEST_CASE("cut expressions parse and print") {
  Cut cut = parse_cut_expr("-1 0 | 2 <= 0", 2, 1);
  CHECK(cut.alpha == rv("-1 0"));
  CHECK(cut.beta == rv("2"));
  CHECK(cut.gamma == Rat(0));
  CHECK(cut_expr(cut) == "-1 0 | 2 <= 0");

  Cut xonly = parse_cut_expr("11 12 | <= 30", 2, 0);
  CHECK(xonly.alpha == rv("11 12"));
  CHECK(xonly.beta.empty());
  CHECK(cut_expr(xonly) == "11 12 | <= 30");

  Cut fracs = parse_cut_expr("1/2 | -3/4 <= 5/6", 1, 1);
  CHECK(parse_cut_expr(cut_expr(fracs), 1, 1) == fracs);

  CHECK_THROWS_AS(parse_cut_expr("1 | 2 <= 0", 2, 1), std::runtime_error);
  CHECK_THROWS_AS(parse_cut_expr("1 0 2 <= 0", 2, 1), std::runtime_error);
  CHECK_THROWS_AS(parse_cut_expr("1 0 | 1/0 <= 0", 2, 1), std::runtime_error);
}
