#include "kcut/io.hpp"

#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcut {

namespace {

struct Line {
  long no = 0;
  std::vector<std::string> toks;
};

std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  long no = 0;
  while (std::getline(in, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line;
    line.no = no;
    std::string tok;
    while (ls >> tok) line.toks.push_back(tok);
    if (!line.toks.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(long no, const std::string& msg) {
  throw std::runtime_error("line " + std::to_string(no) + ": " + msg);
}

Rat rat_tok(const std::string& tok, long no) {
  try {
    return parse_rat(tok);
  } catch (const std::runtime_error& e) {
    fail(no, e.what());
  }
}

Int int_tok(const std::string& tok, long no) {
  std::size_t i = tok.size() > 0 && (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
  if (i == tok.size()) fail(no, "bad integer token '" + tok + "'");
  for (std::size_t j = i; j < tok.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(tok[j])))
      fail(no, "bad integer token '" + tok + "'");
  return Int(tok);
}

long small_int_tok(const std::string& tok, long no, const char* what) {
  Int v = int_tok(tok, no);
  if (v < 0 || v > 1000000) fail(no, std::string(what) + " out of range");
  return v.get_si();
}

// Parses "<p rats> | <q rats>" and optionally "<= rhs" from a token list.
void parse_coef_line(const Line& line, std::size_t from, int p, int q,
                     bool with_rhs, Vec& a, Vec& g, Rat* rhs) {
  std::size_t need = from + p + 1 + q + (with_rhs ? 2 : 0);
  if (line.toks.size() != need) fail(line.no, "wrong number of tokens");
  a.clear();
  g.clear();
  std::size_t i = from;
  for (int j = 0; j < p; ++j) a.push_back(rat_tok(line.toks[i++], line.no));
  if (line.toks[i] != "|") fail(line.no, "expected '|'");
  ++i;
  for (int j = 0; j < q; ++j) g.push_back(rat_tok(line.toks[i++], line.no));
  if (with_rhs) {
    if (line.toks[i] != "<=") fail(line.no, "expected '<='");
    ++i;
    *rhs = rat_tok(line.toks[i], line.no);
  }
}

}  // namespace

MilpInstance parse_milp(std::istream& in) {
  std::vector<Line> lines = significant_lines(in);
  std::size_t li = 0;
  auto next = [&]() -> const Line& {
    if (li >= lines.size())
      throw std::runtime_error("unexpected end of input");
    return lines[li++];
  };

  const Line& head = next();
  if (head.toks.size() != 5 || head.toks[0] != "milp" || head.toks[1] != "p" ||
      head.toks[3] != "q")
    fail(head.no, "expected 'milp p <int> q <int>'");
  int p = static_cast<int>(small_int_tok(head.toks[2], head.no, "p"));
  int q = static_cast<int>(small_int_tok(head.toks[4], head.no, "q"));
  if (p + q < 1) fail(head.no, "p + q must be positive");

  MilpInstance inst;
  inst.p = p;
  inst.q = q;

  const Line& obj = next();
  if (obj.toks.empty() || obj.toks[0] != "maximize")
    fail(obj.no, "expected 'maximize'");
  parse_coef_line(obj, 1, p, q, false, inst.c, inst.h, nullptr);

  const Line& st = next();
  if (st.toks.size() != 1 || st.toks[0] != "st") fail(st.no, "expected 'st'");

  for (;;) {
    const Line& row = next();
    if (row.toks.size() == 1 && row.toks[0] == "end") break;
    Vec a, g;
    Rat rhs;
    parse_coef_line(row, 0, p, q, true, a, g, &rhs);
    inst.A.push_row(std::move(a));
    inst.G.push_row(std::move(g));
    inst.b.push_back(rhs);
  }
  if (li != lines.size()) fail(lines[li].no, "unexpected content after 'end'");
  if (inst.A.col_count() != p) inst.A = Mat(0, p);
  if (inst.G.col_count() != q) inst.G = Mat(0, q);
  inst.validate();
  return inst;
}

MilpInstance parse_milp(const std::string& text) {
  std::istringstream in(text);
  return parse_milp(in);
}

std::string serialize_milp(const MilpInstance& inst) {
  std::ostringstream out;
  out << "milp p " << inst.p << " q " << inst.q << "\n";
  out << "maximize";
  for (const Rat& v : inst.c) out << ' ' << to_string(v);
  out << " |";
  for (const Rat& v : inst.h) out << ' ' << to_string(v);
  out << "\nst\n";
  for (int i = 0; i < inst.m(); ++i) {
    bool first = true;
    for (int j = 0; j < inst.p; ++j) {
      out << (first ? "" : " ") << to_string(inst.A[i][j]);
      first = false;
    }
    out << (first ? "|" : " |");
    for (int j = 0; j < inst.q; ++j) out << ' ' << to_string(inst.G[i][j]);
    out << " <= " << to_string(inst.b[i]) << "\n";
  }
  out << "end\n";
  return out.str();
}

Disjunction parse_disjunction(std::istream& in) {
  std::vector<Line> lines = significant_lines(in);
  std::size_t li = 0;
  auto next = [&]() -> const Line& {
    if (li >= lines.size())
      throw std::runtime_error("unexpected end of input");
    return lines[li++];
  };

  const Line& head = next();
  if (head.toks.size() != 5 || head.toks[0] != "dis" || head.toks[1] != "k" ||
      head.toks[3] != "p")
    fail(head.no, "expected 'dis k <int> p <int>'");
  int k = static_cast<int>(small_int_tok(head.toks[2], head.no, "k"));
  int p = static_cast<int>(small_int_tok(head.toks[4], head.no, "p"));
  if (k < 2) fail(head.no, "k must be at least 2");
  if (p < 1) fail(head.no, "p must be positive");

  Disjunction dis;
  dis.p = p;
  for (int t = 0; t < k; ++t) {
    const Line& row = next();
    if (row.toks.size() != static_cast<std::size_t>(p) + 2)
      fail(row.no, "wrong number of tokens");
    if (row.toks[p] != "<=") fail(row.no, "expected '<='");
    IntVec d;
    for (int j = 0; j < p; ++j) d.push_back(int_tok(row.toks[j], row.no));
    dis.d.push_back(std::move(d));
    dis.delta.push_back(int_tok(row.toks[p + 1], row.no));
  }
  if (li != lines.size()) fail(lines[li].no, "unexpected trailing content");
  return dis;
}

Disjunction parse_disjunction(const std::string& text) {
  std::istringstream in(text);
  return parse_disjunction(in);
}

std::string serialize_disjunction(const Disjunction& dis) {
  std::ostringstream out;
  out << "dis k " << dis.k() << " p " << dis.p << "\n";
  for (int i = 0; i < dis.k(); ++i) {
    for (int j = 0; j < dis.p; ++j)
      out << (j ? " " : "") << to_string(dis.d[i][j]);
    out << " <= " << to_string(dis.delta[i]) << "\n";
  }
  return out.str();
}

Cut parse_cut_expr(const std::string& text, int p, int q) {
  std::istringstream ls(text);
  Line line;
  line.no = 1;
  std::string tok;
  while (ls >> tok) line.toks.push_back(tok);
  Cut cut;
  parse_coef_line(line, 0, p, q, true, cut.alpha, cut.beta, &cut.gamma);
  return cut;
}

std::string cut_expr(const Cut& cut) {
  std::ostringstream out;
  for (const Rat& v : cut.alpha) out << to_string(v) << ' ';
  out << '|';
  for (const Rat& v : cut.beta) out << ' ' << to_string(v);
  out << " <= " << to_string(cut.gamma);
  return out.str();
}

}  // namespace kcut
