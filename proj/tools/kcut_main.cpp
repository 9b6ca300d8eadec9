#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kcut/disjunction.hpp"
#include "kcut/gmi.hpp"
#include "kcut/io.hpp"
#include "kcut/model.hpp"
#include "kcut/oracle.hpp"
#include "kcut/projection.hpp"
#include "kcut/simplex.hpp"
#include "kcut/solver.hpp"

namespace {

using namespace kcut;

MilpInstance read_instance(const std::string& arg) {
  const std::string tag = "builtin:";
  if (arg.rfind(tag, 0) == 0) return builtin_instance(arg.substr(tag.size()));
  if (arg == "-") return parse_milp(std::cin);
  std::ifstream f(arg);
  if (!f) throw std::runtime_error("cannot open '" + arg + "'");
  return parse_milp(f);
}

Disjunction read_disjunction(const std::string& arg) {
  if (arg == "-") return parse_disjunction(std::cin);
  std::ifstream f(arg);
  if (!f) throw std::runtime_error("cannot open '" + arg + "'");
  return parse_disjunction(f);
}

std::string point_str(const Point& pt) {
  std::ostringstream out;
  for (const Rat& v : pt.x) out << ' ' << to_string(v);
  out << " |";
  for (const Rat& v : pt.y) out << ' ' << to_string(v);
  return out.str();
}

const char* status_str(MilpStatus st) {
  switch (st) {
    case MilpStatus::Optimal:
      return "optimal";
    case MilpStatus::Infeasible:
      return "infeasible";
    default:
      return "iteration-limit";
  }
}

void print_solution(MilpStatus status, const std::optional<Point>& pt,
                    const std::optional<Rat>& value) {
  std::cout << "status " << status_str(status) << "\n";
  if (status != MilpStatus::Optimal) return;
  std::cout << "value " << to_string(*value) << "\n";
  std::cout << "x";
  for (const Rat& v : pt->x) std::cout << ' ' << to_string(v);
  std::cout << "\ny";
  for (const Rat& v : pt->y) std::cout << ' ' << to_string(v);
  std::cout << "\n";
}

int exit_code(MilpStatus st) {
  switch (st) {
    case MilpStatus::Optimal:
      return 0;
    case MilpStatus::Infeasible:
      return 1;
    default:
      return 2;
  }
}

int run_solve(const std::string& file, const SolveOptions& opt) {
  MilpInstance inst = read_instance(file);
  MilpResult res = solve(inst, opt);
  for (const TraceEvent& ev : res.trace) {
    switch (ev.kind) {
      case TraceEvent::Kind::LpSolved:
        std::cout << "trace lp value " << to_string(ev.value) << " point"
                  << point_str(ev.point) << "\n";
        break;
      case TraceEvent::Kind::GmiCut:
        std::cout << "trace gmi var x" << ev.var << " cut " << cut_expr(ev.cut)
                  << "\n";
        break;
      case TraceEvent::Kind::ObjectiveCut:
        std::cout << "trace objcut gamma " << to_string(ev.gamma_star)
                  << " gammahat " << to_string(ev.gamma_hat) << " rays "
                  << ev.ray_count << " cut " << cut_expr(ev.cut) << "\n";
        break;
      case TraceEvent::Kind::End:
        std::cout << "trace end " << status_str(ev.terminal) << "\n";
        break;
    }
  }
  print_solution(res.status, res.point, res.value);
  return exit_code(res.status);
}

int run_oracle(const std::string& file) {
  OracleResult res = oracle_solve(read_instance(file));
  print_solution(res.status, res.point, res.value);
  return exit_code(res.status);
}

MilpInstance instance_of_projection(const ProjectedSystem& sys) {
  MilpInstance inst;
  inst.p = sys.p;
  inst.q = 0;
  inst.c.assign(sys.p, Rat(0));
  inst.A = Mat(0, sys.p);
  inst.G = Mat(0, 0);
  for (const ProjRow& r : sys.rows) {
    inst.A.push_row(r.d);
    inst.G.push_row(Vec{});
    inst.b.push_back(r.rhs);
  }
  return inst;
}

int run_project(const std::string& file, bool minimize) {
  MilpInstance inst = read_instance(file);
  ProjectedSystem sys = project_x(polyhedron_of(inst));
  if (minimize) {
    std::vector<ProjRow> rows = sys.rows;
    std::size_t i = 0;
    while (i < rows.size()) {
      ProjectedSystem rest;
      rest.p = sys.p;
      for (std::size_t l = 0; l < rows.size(); ++l)
        if (l != i) rest.rows.push_back(rows[l]);
      LpResult lp = solve_lp(polyhedron_of(rest), rows[i].d, Vec{});
      bool implied = lp.status == LpStatus::Infeasible ||
                     (lp.status == LpStatus::Optimal &&
                      lp.value <= rows[i].rhs);
      if (implied)
        rows.erase(rows.begin() + i);
      else
        ++i;
    }
    sys.rows = std::move(rows);
  }
  std::cout << serialize_milp(instance_of_projection(sys));
  return 0;
}

int run_objective_cut(const std::string& file, const std::string& gamma,
                      const std::string& mode) {
  MilpInstance inst = read_instance(file);
  RoundingMode rm;
  if (mode == "weak")
    rm = RoundingMode::Weak;
  else if (mode == "strict")
    rm = RoundingMode::Strict;
  else
    throw std::runtime_error("mode must be weak or strict");
  ObjectiveCutReport rep = objective_cut(inst, parse_rat(gamma), rm);
  std::cout << "gamma " << to_string(rep.gamma_star) << "\n";
  std::cout << "mode " << mode << "\n";
  std::cout << "gammahat " << to_string(rep.gamma_hat) << "\n";
  std::cout << "cut " << cut_expr(rep.cut) << "\n";
  std::cout << "rays " << rep.rays.size() << "\n";
  for (const ObjectiveCutRay& ray : rep.rays) {
    std::cout << "ray";
    for (const Int& v : ray.v) std::cout << ' ' << to_string(v);
    std::cout << " | d";
    for (const Int& v : ray.d) std::cout << ' ' << to_string(v);
    std::cout << " | delta " << to_string(ray.delta) << " | gamma-r "
              << (ray.gamma_r ? to_string(*ray.gamma_r) : std::string("-"))
              << "\n";
  }
  std::cout << "disjunction\n" << serialize_disjunction(rep.disjunction);
  return 0;
}

int run_check_disjunction(const std::string& file, long bound) {
  Disjunction dis = read_disjunction(file);
  DisjunctionVerdict verdict = is_valid_disjunction(dis, Int(bound));
  switch (verdict.kind) {
    case DisjunctionVerdict::Kind::Valid:
      std::cout << "verdict valid\n";
      return 0;
    case DisjunctionVerdict::Kind::Invalid: {
      std::cout << "verdict invalid\nwitness";
      for (const Int& v : *verdict.witness) std::cout << ' ' << to_string(v);
      std::cout << "\n";
      return 1;
    }
    default:
      std::cout << "verdict inconclusive\n";
      return 2;
  }
}

int run_certify_cut(const std::string& milp_file, const std::string& dis_file,
                    const std::string& cut_text) {
  MilpInstance inst = read_instance(milp_file);
  Disjunction dis = read_disjunction(dis_file);
  if (dis.p != inst.p)
    throw std::runtime_error("disjunction is over " + std::to_string(dis.p) +
                             " integer variables, instance has " +
                             std::to_string(inst.p));
  Cut cut = parse_cut_expr(cut_text, inst.p, inst.q);
  bool ok = certify_cut(polyhedron_of(inst), cut, dis);
  std::cout << "certified " << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cutting plane engine for bounded mixed integer programs"};
  app.require_subcommand(1);

  std::string file, dis_file, gamma, cut_text;
  std::string mode = "weak";
  SolveOptions opt;
  bool minimize = false;
  long bound = 10;
  int expn = 1;
  std::string name;

  CLI::App* solve = app.add_subcommand("solve", "optimize an instance");
  solve->add_option("file", file)->required();
  solve->add_flag("--trace", opt.trace);
  solve->add_option("--max-outer", opt.max_outer);
  solve->add_option("--max-inner", opt.max_inner);
  solve->add_flag("--include-x0", opt.include_x0);

  CLI::App* oracle = app.add_subcommand("oracle", "solve by enumeration");
  oracle->add_option("file", file)->required();

  CLI::App* project = app.add_subcommand("project", "project onto x");
  project->add_option("file", file)->required();
  project->add_flag("--minimize", minimize);

  CLI::App* objcut = app.add_subcommand("objective-cut", "cut at a level");
  objcut->add_option("file", file)->required();
  objcut->add_option("--gamma", gamma)->required();
  objcut->add_option("--mode", mode);

  CLI::App* checkdis =
      app.add_subcommand("check-disjunction", "coverage of the integers");
  checkdis->add_option("file", dis_file)->required();
  checkdis->add_option("--bound", bound);

  CLI::App* certify = app.add_subcommand("certify-cut", "validate via terms");
  certify->add_option("milp", file)->required();
  certify->add_option("dis", dis_file)->required();
  certify->add_option("--cut", cut_text)->required();

  CLI::App* gen = app.add_subcommand("gen-expon", "exponential facet family");
  gen->add_option("n", expn)->required()->check(CLI::Range(1, 16));

  CLI::App* builtin = app.add_subcommand("builtin", "print a named instance");
  builtin->add_option("name", name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return run_solve(file, opt);
    if (oracle->parsed()) return run_oracle(file);
    if (project->parsed()) return run_project(file, minimize);
    if (objcut->parsed()) return run_objective_cut(file, gamma, mode);
    if (checkdis->parsed()) return run_check_disjunction(dis_file, bound);
    if (certify->parsed()) return run_certify_cut(file, dis_file, cut_text);
    if (gen->parsed()) {
      std::cout << serialize_milp(gen_expon(expn));
      return 0;
    }
    if (builtin->parsed()) {
      std::cout << serialize_milp(builtin_instance(name));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
