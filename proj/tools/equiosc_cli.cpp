// Command-line front end for the equioscillation library.
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "equiosc/applications.hpp"
#include "equiosc/equi_solver.hpp"
#include "equiosc/errors.hpp"
#include "equiosc/examples.hpp"
#include "equiosc/oracle.hpp"
#include "equiosc/perturbation.hpp"
#include "equiosc/report_io.hpp"

namespace {

using namespace equiosc;

enum ExitCode : int {
  kOk = 0,
  kDeviation = 1,
  kValidation = 2,
  kConvergence = 3,
  kBudget = 4,
};

struct Common {
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::vector<double> grid{101, 2};
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string json_out;
};

void emit(const Common& c, const Json& j) {
  if (c.json_out.empty()) return;
  std::ofstream out(c.json_out);
  if (!out) throw std::runtime_error("cannot write " + c.json_out);
  out << j.dump(2) << '\n';
}

std::string join(std::span<const double> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + format_real(v[i]);
  return s;
}

GridSpec grid_of(const Common& c) {
  if (c.grid.empty() || c.grid.size() > 2) throw ValidationError("--grid takes P or P,R");
  GridSpec g{static_cast<int>(c.grid[0]), c.grid.size() > 1 ? static_cast<int>(c.grid[1]) : 2};
  g.threads = c.threads;
  return g;
}

void print_report(const SolveReport& r) {
  std::cout << "nodes: " << join(r.nodes.nodes()) << '\n';
  std::cout << "m:";
  for (const auto& m : r.maxima.m) std::cout << ' ' << format_real(m);
  std::cout << "\nvalue: " << format_real(r.value) << "\nresidual: " << format_real(r.residual)
            << "\niterations: " << r.iterations << "\nconverged: " << std::boolalpha
            << r.converged << '\n';
  if (r.non_uniqueness_risk) {
    std::cout << "note: kernel is not strictly monotone; solution obtained by regularization\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Equioscillation, minimax and maximin for sums of translates"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--tol", c.tol, "Residual tolerance")->capture_default_str();
  app.add_option("--seed", c.seed, "Seed for random sampling")->capture_default_str();
  app.add_option("--grid", c.grid, "Grid points per dimension and refinement rounds: P[,R]")
      ->delimiter(',');
  app.add_option("--threads", c.threads, "Worker threads for grid searches");
  app.add_option("--json-out", c.json_out, "Write a JSON report to this path");

  std::string problem_path;
  auto* solve = app.add_subcommand("solve", "Equioscillation point of a problem");
  solve->add_option("problem", problem_path, "Problem JSON")->required();

  std::vector<double> target;
  auto* solve_diff = app.add_subcommand("solve-diff", "Preimage of a difference vector");
  solve_diff->add_option("problem", problem_path, "Problem JSON")->required();
  solve_diff->add_option("--target", target, "Target c_1,...,c_n")->delimiter(',')->required();

  std::string mode = "both";
  auto* oracle = app.add_subcommand("oracle", "Brute-force grid minimax and maximin");
  oracle->add_option("problem", problem_path, "Problem JSON")->required();
  oracle->add_option("--mode", mode, "minimax, maximin or both")
      ->check(CLI::IsMember({"minimax", "maximin", "both"}));

  std::vector<double> xs;
  std::vector<double> ys;
  int samples = 500;
  auto* intertwine = app.add_subcommand(
      "intertwine", "Compare interval maxima of two node systems, or run a random census");
  intertwine->add_option("problem", problem_path, "Problem JSON")->required();
  intertwine->add_option("--x", xs, "First node system")->delimiter(',');
  intertwine->add_option("--y", ys, "Second node system")->delimiter(',');
  intertwine->add_option("--samples", samples, "Random pairs when --x/--y are absent");

  std::vector<double> interval{0.0, 1.0};
  std::vector<double> exponents;
  double alpha = 0.0;
  double beta = 0.0;
  auto* bojanov = app.add_subcommand("bojanov", "Weighted extremal polynomial on [a,b]");
  bojanov->add_option("--interval", interval, "a,b")->delimiter(',');
  bojanov->add_option("--r", exponents, "Exponents r_1,...,r_n")->delimiter(',')->required();
  bojanov->add_option("--alpha", alpha, "Weight exponent at a: w = (t-a)^alpha (b-t)^beta");
  bojanov->add_option("--beta", beta, "Weight exponent at b");

  std::vector<double> bounds;
  auto* union_cmp = app.add_subcommand("union-compare",
                                       "Restricted vs unrestricted constants on a union of intervals");
  union_cmp->add_option("--E", bounds, "a1,b1,a2,b2,...")->delimiter(',')->required();
  union_cmp->add_option("--r", exponents, "Exponents")->delimiter(',')->required();

  std::string example_id;
  int example_n = 3;
  auto* example = app.add_subcommand("example", "Reproduce a built-in example against closed forms");
  example->add_option("id", example_id, "Example id")
      ->required()
      ->check(CLI::IsMember(example_ids()));
  example->add_option("--n", example_n, "Degree for classical_chebyshev");

  std::vector<double> nodes;
  std::string out_path;
  int curve_samples = 1000;
  auto* exp = app.add_subcommand("export", "Write F(y, t) samples as CSV plus a JSON sidecar");
  exp->add_option("problem", problem_path, "Problem JSON")->required();
  exp->add_option("--nodes", nodes, "Node system")->delimiter(',')->required();
  exp->add_option("--samples", curve_samples, "Number of rows");
  exp->add_option("--out", out_path, "CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }
  SolverOptions so;
  so.tol = c.tol;

  if (*solve || *solve_diff) {
    const Problem p = load_problem(problem_path);
    const SolveReport r = *solve ? solve_equioscillation(p, so) : solve_difference(p, target, so);
    print_report(r);
    emit(c, report_to_json(r));
  } else if (*oracle) {
    const Problem p = load_problem(problem_path);
    const GridSpec g = grid_of(c);
    Json j;
    if (mode != "maximin") {
      const GridResult r = grid_minimax(p, g);
      std::cout << "minimax nodes: " << join(r.nodes.nodes()) << "\nminimax value: "
                << format_real(r.value) << '\n';
      j["minimax"] = {{"nodes", r.nodes.nodes()}, {"value", r.value}, {"pitch", r.final_pitch}};
    }
    if (mode != "minimax") {
      const GridResult r = grid_maximin(p, g);
      std::cout << "maximin nodes: " << join(r.nodes.nodes()) << "\nmaximin value: "
                << format_real(r.value) << '\n';
      j["maximin"] = {{"nodes", r.nodes.nodes()},
                      {"value", std::isfinite(r.value) ? Json(r.value) : Json(nullptr)},
                      {"pitch", r.final_pitch}};
    }
    emit(c, j);
  } else if (*intertwine) {
    const Problem p = load_problem(problem_path);
    if (xs.empty() != ys.empty()) throw ValidationError("give both --x and --y, or neither");
    if (!xs.empty()) {
      const auto v = check_intertwining(p, NodeSystem(xs), NodeSystem(ys));
      static const char* kinds[] = {"equal", "witness", "majorization_violation"};
      static const char* dirs[] = {"x_below_y", "x_above_y", "tied"};
      const char* kind = kinds[static_cast<int>(v.kind)];
      std::cout << "verdict: " << kind;
      if (v.kind == IntertwiningVerdict::Kind::kWitness) std::cout << " i=" << v.i << " j=" << v.j;
      if (v.kind == IntertwiningVerdict::Kind::kMajorizationViolation) {
        std::cout << " direction=" << dirs[static_cast<int>(v.direction)];
      }
      std::cout << '\n';
      emit(c, {{"verdict", kind}, {"i", v.i}, {"j", v.j}});
    } else {
      const auto r = check_strict_majorization_excluded(p, samples, c.seed);
      std::cout << "hypotheses hold: " << std::boolalpha << r.hypotheses_hold
                << "\npairs checked: " << r.pairs_checked
                << "\nstrict majorizations: " << r.strict_majorizations
                << "\nweak majorizations: " << r.weak_majorizations << '\n';
      emit(c, {{"hypotheses_hold", r.hypotheses_hold},
               {"pairs_checked", r.pairs_checked},
               {"strict_majorizations", r.strict_majorizations},
               {"weak_majorizations", r.weak_majorizations}});
    }
  } else if (*bojanov) {
    if (interval.size() != 2) throw ValidationError("--interval takes a,b");
    const double a = interval[0];
    const double b = interval[1];
    const WeightSpec w(a, b, {WeightPiece{a, b, WeightJacobi{1.0, a, alpha, b, beta}}});
    const GapSolution s = solve_bojanov(GapProblem{exponents, w}, so);
    std::cout << "nodes: " << join(s.nodes) << "\nextremal points: " << join(s.extremal_points)
              << "\nnorm: " << format_real(s.norm) << "\ninterlaces: " << std::boolalpha
              << s.interlaces << '\n';
    emit(c, {{"nodes", s.nodes},
             {"extremal_points", s.extremal_points},
             {"norm", s.norm},
             {"interlaces", s.interlaces}});
  } else if (*union_cmp) {
    if (bounds.size() < 2 || bounds.size() % 2 != 0) throw ValidationError("--E needs pairs a,b");
    std::vector<std::pair<double, double>> comps;
    for (std::size_t i = 0; i < bounds.size(); i += 2) comps.emplace_back(bounds[i], bounds[i + 1]);
    const IntervalUnion e(comps);
    RestrictedOptions ro;
    const GridSpec g = grid_of(c);
    ro.points_per_dim = g.points_per_dim;
    ro.refine_rounds = g.refine_rounds;
    ro.threads = c.threads;
    const auto cmp = compare_constants(e, exponents, WeightSpec::unit(e.lo(), e.hi()), so, ro);
    std::cout << "unrestricted: " << format_real(cmp.unrestricted) << " at "
              << join(cmp.unrestricted_nodes) << "\nrestricted: " << format_real(cmp.restricted)
              << " at " << join(cmp.restricted_nodes)
              << "\nbound factor: " << format_real(cmp.bound_factor)
              << "\nsnapped norm: " << format_real(cmp.snapped_norm) << "\nbounds hold: "
              << std::boolalpha << (cmp.lower_ok && cmp.upper_ok && cmp.snap_ok) << '\n';
    emit(c, {{"unrestricted", cmp.unrestricted},
             {"restricted", cmp.restricted},
             {"bound_factor", cmp.bound_factor},
             {"snapped_norm", cmp.snapped_norm},
             {"unrestricted_nodes", cmp.unrestricted_nodes},
             {"restricted_nodes", cmp.restricted_nodes},
             {"lower_ok", cmp.lower_ok},
             {"upper_ok", cmp.upper_ok},
             {"snap_ok", cmp.snap_ok}});
  } else if (*example) {
    const ExampleReport rep = run_example(example_id, example_n);
    std::cout << "example " << rep.id << '\n';
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
      std::cout << "  " << row.quantity << ": computed " << format_real(row.computed)
                << ", expected " << format_real(row.expected) << ", deviation "
                << format_real(row.deviation()) << '\n';
      rows.push_back({{"quantity", row.quantity},
                      {"computed", row.computed},
                      {"expected", row.expected},
                      {"deviation", row.deviation()}});
    }
    std::cout << "max deviation: " << format_real(rep.max_deviation()) << '\n';
    emit(c, {{"id", rep.id}, {"rows", rows}, {"max_deviation", rep.max_deviation()}});
    return rep.ok() ? kOk : kDeviation;
  } else if (*exp) {
    const Problem p = load_problem(problem_path);
    export_curve(p, NodeSystem(nodes), curve_samples, out_path);
    std::cout << "wrote " << out_path << " and " << out_path << ".json\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const equiosc::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return kConvergence;
  } catch (const equiosc::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return kBudget;
  } catch (const equiosc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
}
