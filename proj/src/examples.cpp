#include "equiosc/examples.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "equiosc/equi_solver.hpp"
#include "equiosc/errors.hpp"
#include "equiosc/oracle.hpp"
#include "equiosc/perturbation.hpp"

namespace equiosc {
namespace {

constexpr double kCapStrict = 0.25;
constexpr double kJumpStrict = 0.955671;
constexpr double kCapMonotone = 0.1;

std::string at(std::span<const double> y) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (std::size_t i = 0; i < y.size(); ++i) os << (i ? ", " : "") << y[i];
  os << ")";
  return os.str();
}

double capped(double t, double a) { return std::min(0.0, std::log(std::abs(t / a))); }

Problem singularity() {
  return Problem({1.0, 1.0}, KernelSpec::sqrt_shift(),
                 FieldSpec({FieldPiece{0.0, 1.0, SqrtAffine{8.0, -1.0, 1.0}}}));
}

Problem monotonicity() {
  return Problem({1.0}, KernelSpec::capped_log_plus_quadratic(kCapMonotone),
                 FieldSpec({FieldPiece{0.0, 1.0, SqrtAffine{1.0, 1.0, 0.0}}}));
}

Problem strictness() {
  return Problem({1.0}, KernelSpec::capped_log(kCapStrict),
                 FieldSpec::indicator(kJumpStrict, 1.0, 1.0, 0.0));
}

Problem nonmonotone() { return Problem({1.0, 1.0}, KernelSpec::tent_log(), FieldSpec::zero()); }

Problem chebyshev(int n) {
  if (n < 1) throw ValidationError("classical_chebyshev needs n >= 1");
  return Problem(std::vector<double>(static_cast<std::size_t>(n), 1.0), KernelSpec::log(),
                 FieldSpec::zero());
}

Problem quartics() {
  return Problem({1.0, 1.0, 1.0, 1.0}, KernelSpec::log(), FieldSpec::zero());
}

void run_singularity(ExampleReport& rep) {
  const Problem p = singularity();
  const GridSpec grid{101, 2};
  const GridResult mm = grid_minimax(p, grid);
  const GridResult mx = grid_maximin(p, grid);
  rep.rows.push_back({"minimax y1", mm.nodes.nodes()[0], 0.0});
  rep.rows.push_back({"minimax y2", mm.nodes.nodes()[1], 0.0});
  rep.rows.push_back({"minimax value", mm.value, 12.0});
  rep.rows.push_back({"maximin y1", mx.nodes.nodes()[0], 0.0});
  rep.rows.push_back({"maximin y2", mx.nodes.nodes()[1], 0.0});
  rep.rows.push_back({"maximin value", mx.value, 12.0});
  const std::vector<std::vector<double>> probes{
      {0.1, 0.3}, {0.25, 0.75}, {0.5, 0.5}, {0.0, 1.0}, {0.9, 0.95}};
  for (const auto& y : probes) {
    const double y1 = y[0];
    const double y2 = y[1];
    const auto mv = interval_maxima(p, NodeSystem(y));
    const double expect[3] = {8.0 + std::sqrt(4.0 + y1) + std::sqrt(4.0 + y2),
                              8.0 * std::sqrt(1.0 - y1) + 2.0 + std::sqrt(4.0 + y2 - y1),
                              8.0 * std::sqrt(1.0 - y2) + std::sqrt(4.0 + y2 - y1) + 2.0};
    for (std::size_t j = 0; j < 3; ++j) {
      rep.rows.push_back({"m" + std::to_string(j) + " at " + at(y), mv.m[j].value(), expect[j]});
    }
  }
}

void run_monotonicity(ExampleReport& rep) {
  const Problem p = monotonicity();
  const GridResult mm = grid_minimax(p, GridSpec{1001, 2});
  rep.rows.push_back({"minimax x", mm.nodes.nodes()[0], 0.0});
  rep.rows.push_back({"minimax value", mm.value, 11.0 / 8.0});
  const auto mv = interval_maxima(p, NodeSystem({0.0}));
  rep.rows.push_back({"m1 at 0", mv.m[1].value(), 11.0 / 8.0});
  rep.rows.push_back({"argmax of m1 at 0", *mv.argmax[1], 0.25});
}

void run_strictness(ExampleReport& rep) {
  const Problem p = strictness();
  const double a = kCapStrict;
  const double point = 1.0 - a / std::numbers::e;
  const SolveReport s = solve_equioscillation(p);
  rep.rows.push_back({"equioscillation point", s.nodes.nodes()[0], point});
  rep.rows.push_back({"equioscillation value", s.value, 0.0});
  double worst = 0.0;
  for (int k = 0; k <= 40; ++k) {
    const double x = a + (point - a) * k / 40.0;
    worst = std::max(worst, std::abs(interval_maxima(p, NodeSystem({x})).lower().value()));
  }
  rep.rows.push_back({"max |lower value| on [a, 1-a/e]", worst, 0.0});
  const auto mid = interval_maxima(p, NodeSystem({0.5}));
  rep.rows.push_back({"m0 at 0.5", mid.m[0].value(), 0.0});
  rep.rows.push_back({"m1 at 0.5", mid.m[1].value(), 1.0});
  const auto fig = interval_maxima(p, NodeSystem({0.775}));
  rep.rows.push_back({"m1 at 0.775", fig.m[1].value(), 1.0 + capped(1.0 - 0.775, a)});
}

void run_nonmonotone(ExampleReport& rep) {
  const Problem p = nonmonotone();
  const double d0 = (std::sqrt(82.0) - 1.0) / 90.0;
  const double level = 2.0 * std::log(10.0 * d0);
  rep.rows.push_back({"branch formulas agree at delta0", level, std::log(1.0 - 20.0 * d0 / 9.0)});
  double worst = 0.0;
  for (int k = 0; k <= 12; ++k) {
    const double a = (d0 + 0.1) + (1.0 - 2.0 * (d0 + 0.1)) * k / 12.0;
    const auto mv = interval_maxima(p, NodeSystem({a - d0, a + d0}));
    for (const auto& m : mv.m) worst = std::max(worst, std::abs(m.value() - level));
  }
  rep.rows.push_back({"max |m_j - level| along a-scan at delta0", worst, 0.0});
  const auto at_zero = interval_maxima(p, NodeSystem({0.5, 0.5}));
  rep.rows.push_back({"upper value at delta = 0", at_zero.upper().value(), 0.0});
  const auto at_tenth = interval_maxima(p, NodeSystem({0.4, 0.6}));
  rep.rows.push_back({"upper value at delta = 1/10", at_tenth.upper().value(), 0.0});
  const auto off = interval_maxima(p, NodeSystem({0.45, 0.55}));
  rep.rows.push_back(
      {"m1 at delta = 0.05", off.m[1].value(), 2.0 * std::log(10.0 * 0.05)});
}

void run_chebyshev(ExampleReport& rep, int n) {
  const SolveReport s = solve_equioscillation(chebyshev(n));
  std::vector<double> expect;
  for (int j = 1; j <= n; ++j) {
    expect.push_back((1.0 + std::cos((2.0 * j - 1.0) * std::numbers::pi / (2.0 * n))) / 2.0);
  }
  std::sort(expect.begin(), expect.end());
  for (int j = 0; j < n; ++j) {
    rep.rows.push_back({"node " + std::to_string(j + 1), s.nodes.nodes()[static_cast<std::size_t>(j)],
                        expect[static_cast<std::size_t>(j)]});
  }
  rep.rows.push_back({"value", s.value, std::log(2.0 * std::pow(4.0, -n))});
}

void run_quartics(ExampleReport& rep) {
  const Problem p = quartics();
  const NodeSystem x({0.05, 0.22, 0.634, 0.915});
  const NodeSystem y({0.035, 0.25, 0.4, 0.965});
  MaximizeOptions dense;
  dense.strategy = MaxStrategy::kDenseSampling;
  dense.samples = 1000000;
  for (const auto& [name, sys] : {std::pair{"x", x}, std::pair{"y", y}}) {
    const auto g = interval_maxima(p, sys);
    const auto d = interval_maxima(p, sys, dense);
    for (std::size_t j = 0; j < g.m.size(); ++j) {
      rep.rows.push_back({std::string("m") + std::to_string(j) + "(" + name + ") vs sampling",
                          g.m[j].value(), d.m[j].value()});
    }
  }
  const auto v = check_intertwining(p, x, y);
  rep.rows.push_back({"two-sided witness found",
                      v.kind == IntertwiningVerdict::Kind::kWitness ? 1.0 : 0.0, 1.0});
}

}  // namespace

double ExampleRow::deviation() const { return std::abs(computed - expected); }

double ExampleReport::max_deviation() const {
  double d = 0.0;
  for (const auto& r : rows) d = std::max(d, r.deviation());
  return d;
}

std::vector<std::string> example_ids() {
  return {"singularity", "monotonicity", "strictness", "nonmonotone", "classical_chebyshev",
          "quartics"};
}

Problem example_problem(std::string_view id, int n) {
  if (id == "singularity") return singularity();
  if (id == "monotonicity") return monotonicity();
  if (id == "strictness") return strictness();
  if (id == "nonmonotone") return nonmonotone();
  if (id == "classical_chebyshev") return chebyshev(n);
  if (id == "quartics") return quartics();
  throw ValidationError("unknown example id '" + std::string(id) + "'");
}

ExampleReport run_example(std::string_view id, int n) {
  ExampleReport rep;
  rep.id = std::string(id);
  if (id == "singularity") {
    run_singularity(rep);
  } else if (id == "monotonicity") {
    run_monotonicity(rep);
  } else if (id == "strictness") {
    run_strictness(rep);
  } else if (id == "nonmonotone") {
    run_nonmonotone(rep);
  } else if (id == "classical_chebyshev") {
    rep.id += "(" + std::to_string(n) + ")";
    run_chebyshev(rep, n);
  } else if (id == "quartics") {
    run_quartics(rep);
  } else {
    throw ValidationError("unknown example id '" + std::string(id) + "'");
  }
  return rep;
}

}  // namespace equiosc
