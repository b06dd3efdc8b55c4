#include "equiosc/applications.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "equiosc/errors.hpp"

namespace equiosc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTieTol = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

FieldSpec build_log_field(double a, double b, const std::vector<WeightPiece>& pieces,
                          const std::vector<std::pair<double, double>>& point_values) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ValidationError("weight interval must satisfy a < b");
  }
  const double len = b - a;
  auto map = [&](double t) { return std::clamp((t - a) / len, 0.0, 1.0); };
  std::vector<FieldPiece> out;
  for (const auto& piece : pieces) {
    FieldFormula f = std::visit(
        Overloaded{
            [](const WeightConstant& w) -> FieldFormula {
              if (!(w.c >= 0.0) || !std::isfinite(w.c)) {
                throw ValidationError("weight constant must be >= 0");
              }
              if (w.c == 0.0) return NegInfinity{};
              return Constant{std::log(w.c)};
            },
            [&](const WeightJacobi& w) -> FieldFormula {
              if (!(w.c > 0.0)) throw ValidationError("Jacobi weight needs c > 0");
              return LogOfWeight{w.c * std::pow(len, w.alpha + w.beta), (w.left - a) / len,
                                 w.alpha, (w.right - a) / len, w.beta};
            },
        },
        piece.formula);
    out.push_back(FieldPiece{map(piece.lo), map(piece.hi), f});
  }
  if (!out.empty()) {
    if (std::abs(pieces.front().lo - a) > 1e-12 * len || std::abs(pieces.back().hi - b) > 1e-12 * len) {
      throw ValidationError("weight pieces must cover [a,b]");
    }
    out.front().lo = 0.0;
    out.back().hi = 1.0;
  }
  std::vector<PointValue> pts;
  for (const auto& [t, v] : point_values) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ValidationError("weight values must be >= 0");
    if (t < a || t > b) throw ValidationError("weight point value outside [a,b]");
    // A zero point value cannot raise an usc function; it carries no information.
    if (v > 0.0) pts.push_back(PointValue{map(t), std::log(v)});
  }
  return FieldSpec(std::move(out), std::move(pts));
}

double to_unit(const IntervalUnion& e, double t) { return (t - e.lo()) / (e.hi() - e.lo()); }

double from_unit(const IntervalUnion& e, double s) { return e.lo() + s * (e.hi() - e.lo()); }

double log_scale(double len, std::span<const double> r) {
  return std::accumulate(r.begin(), r.end(), 0.0) * std::log(len);
}

/// Compositions of n into k non-negative parts, in lexicographic order.
void compositions(int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k - 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int c = 0; c <= n; ++c) {
    cur.push_back(c);
    compositions(n - c, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

WeightSpec::WeightSpec(double a, double b, std::vector<WeightPiece> pieces,
                       std::vector<std::pair<double, double>> point_values)
    : a_(a), b_(b), field_(build_log_field(a, b, pieces, point_values)) {}

WeightSpec WeightSpec::unit(double a, double b) {
  return WeightSpec(a, b, {WeightPiece{a, b, WeightConstant{1.0}}});
}

double WeightSpec::operator()(double t) const {
  if (t < a_ || t > b_) throw DomainError("t outside the weight interval");
  const ExtReal v = field_(std::clamp((t - a_) / (b_ - a_), 0.0, 1.0));
  return v.is_neg_inf() ? 0.0 : std::exp(v.value());
}

Problem GapProblem::to_problem() const { return Problem(r, KernelSpec::log(), weight.log_field()); }

double gap_eval(std::span<const double> nodes, std::span<const double> r,
                const WeightSpec& weight, double t) {
  if (nodes.size() != r.size()) throw PreconditionError("nodes and exponents differ in length");
  double v = weight(t);
  for (std::size_t j = 0; j < nodes.size(); ++j) v *= std::pow(std::abs(t - nodes[j]), r[j]);
  return v;
}

GapSolution solve_bojanov(const GapProblem& gap, const SolverOptions& opts) {
  const Problem p = gap.to_problem();
  GapSolution sol;
  sol.report = solve_equioscillation(p, opts);
  const double len = gap.b() - gap.a();
  for (double s : sol.report.nodes.nodes()) sol.nodes.push_back(gap.a() + s * len);
  for (const auto& t : sol.report.maxima.argmax) {
    sol.extremal_points.push_back(t ? gap.a() + *t * len : std::nan(""));
  }
  sol.norm = std::exp(sol.report.value + log_scale(len, gap.r));
  sol.interlaces = true;
  for (std::size_t j = 0; j < sol.nodes.size(); ++j) {
    sol.interlaces = sol.interlaces && sol.extremal_points[j] < sol.nodes[j] &&
                     sol.nodes[j] < sol.extremal_points[j + 1];
  }
  return sol;
}

bool verify_signed_equioscillation(std::span<const double> nodes, std::span<const double> nu,
                                   std::span<const double> extremal_points,
                                   const WeightSpec& weight) {
  const std::size_t n = nodes.size();
  if (nu.size() != n || extremal_points.size() != n + 1) {
    throw PreconditionError("need n exponents and n+1 extremal points");
  }
  for (double v : nu) {
    if (!(v > 0.0) || v != std::round(v)) {
      throw PreconditionError("signed equioscillation needs positive integer exponents");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!(extremal_points[j] < nodes[j] && nodes[j] < extremal_points[j + 1])) {
      throw PreconditionError("extremal points must interlace with the nodes");
    }
  }
  std::vector<double> values;
  double norm = 0.0;
  for (double t : extremal_points) {
    double v = weight(t);
    for (std::size_t j = 0; j < n; ++j) v *= std::pow(t - nodes[j], nu[j]);
    values.push_back(v);
    norm = std::max(norm, std::abs(v));
  }
  if (!(norm > 0.0)) return false;
  for (std::size_t k = 0; k <= n; ++k) {
    long long tail = 0;
    for (std::size_t j = k; j < n; ++j) tail += std::llround(nu[j]);
    const double sign = (tail % 2 == 0) ? 1.0 : -1.0;
    if (std::abs(values[k] - sign * norm) > 1e-9 * norm) return false;
  }
  return true;
}

IntervalUnion::IntervalUnion(std::vector<std::pair<double, double>> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw ValidationError("interval union needs a component");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto [a, b] = components_[i];
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
      throw ValidationError("components must satisfy a < b");
    }
    if (i > 0 && !(components_[i - 1].second < a)) {
      throw ValidationError("components must be ordered and disjoint");
    }
  }
}

bool IntervalUnion::contains(double t) const {
  return std::any_of(components_.begin(), components_.end(),
                     [t](const auto& c) { return c.first <= t && t <= c.second; });
}

Problem union_problem(const IntervalUnion& e, std::span<const double> r, const WeightSpec& weight) {
  const double tol = 1e-12 * (e.hi() - e.lo());
  if (std::abs(weight.a() - e.lo()) > tol || std::abs(weight.b() - e.hi()) > tol) {
    throw ValidationError("weight must be defined on the convex hull of E");
  }
  const FieldSpec& w = weight.log_field();
  std::vector<double> cuts;
  for (const auto& piece : w.pieces()) {
    cuts.push_back(piece.lo);
    cuts.push_back(piece.hi);
  }
  std::vector<std::pair<double, double>> unit_components;
  for (const auto& [a, b] : e.components()) {
    unit_components.emplace_back(to_unit(e, a), to_unit(e, b));
    cuts.push_back(unit_components.back().first);
    cuts.push_back(unit_components.back().second);
  }
  unit_components.front().first = 0.0;
  unit_components.back().second = 1.0;
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.front() = 0.0;
  cuts.back() = 1.0;
  auto in_e = [&](double s) {
    return std::any_of(unit_components.begin(), unit_components.end(),
                       [s](const auto& c) { return c.first <= s && s <= c.second; });
  };
  std::vector<FieldPiece> pieces;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    pieces.push_back(FieldPiece{cuts[i], cuts[i + 1],
                                in_e(mid) ? w.formula_at(mid) : FieldFormula{NegInfinity{}}});
  }
  std::vector<PointValue> pts;
  for (const auto& pv : w.point_values()) {
    if (in_e(pv.t)) pts.push_back(pv);
  }
  return Problem({r.begin(), r.end()}, KernelSpec::log(), FieldSpec(std::move(pieces), std::move(pts)));
}

double union_norm(const IntervalUnion& e, std::span<const double> r, const WeightSpec& weight,
                  std::span<const double> nodes) {
  const Problem p = union_problem(e, r, weight);
  std::vector<double> s;
  for (double x : nodes) s.push_back(std::clamp(to_unit(e, x), 0.0, 1.0));
  const ExtReal m = upper_value(p, NodeSystem(std::move(s)));
  return std::exp(m.value() + log_scale(e.hi() - e.lo(), r));
}

UnionConstant unrestricted_constant(const IntervalUnion& e, std::span<const double> r,
                                    const WeightSpec& weight, const SolverOptions& opts) {
  const Problem p = union_problem(e, r, weight);
  const SolveReport rep = solve_equioscillation(p, opts);
  UnionConstant out;
  out.value = std::exp(rep.value + log_scale(e.hi() - e.lo(), r));
  for (double s : rep.nodes.nodes()) out.nodes.push_back(from_unit(e, s));
  return out;
}

std::vector<double> snap_to_E(std::span<const double> nodes, const IntervalUnion& e) {
  std::vector<double> out;
  const auto& comps = e.components();
  for (double x : nodes) {
    double snapped = x;
    for (std::size_t l = 0; l + 1 < comps.size(); ++l) {
      const double b = comps[l].second;
      const double a = comps[l + 1].first;
      if (x > b && x < a) {
        const double to_b = x - b;
        const double to_a = a - x;
        snapped = (to_b <= to_a + kTieTol) ? b : a;
        break;
      }
    }
    out.push_back(snapped);
  }
  std::sort(out.begin(), out.end());
  return out;
}

UnionConstant restricted_constant(const IntervalUnion& e, std::span<const double> r,
                                  const WeightSpec& weight, const RestrictedOptions& opts) {
  const int n = static_cast<int>(r.size());
  if (n > 4) throw BudgetError("restricted search supports n <= 4");
  const Problem p = union_problem(e, r, weight);
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions(n, e.k(), cur, comps);

  // Spread the evaluation budget evenly over assignments and rounds.
  const double per_search =
      static_cast<double>(opts.eval_budget) / (comps.size() * (opts.refine_rounds + 1.0));
  const int points = std::min(opts.points_per_dim,
                              static_cast<int>(std::floor(std::pow(per_search, 1.0 / n) + 1e-9)));
  if (points < 2) throw BudgetError("evaluation budget too small for the restricted search");
  GridSpec grid{points, opts.refine_rounds};
  grid.threads = opts.threads;

  double best_value = kInf;
  std::vector<double> best_nodes;
  auto offer = [&](const std::vector<double>& s, double v) {
    if (v < best_value || (v == best_value && s < best_nodes)) {
      best_value = v;
      best_nodes = s;
    }
  };
  for (const auto& seed : opts.seeds) {
    if (static_cast<int>(seed.size()) != n) throw PreconditionError("seed has wrong size");
    std::vector<double> s;
    for (double x : seed) {
      if (!e.contains(x)) throw PreconditionError("seed node outside E");
      s.push_back(std::clamp(to_unit(e, x), 0.0, 1.0));
    }
    std::sort(s.begin(), s.end());
    offer(s, upper_value(p, NodeSystem(s)).value());
  }
  const auto& components = e.components();
  for (const auto& counts : comps) {
    std::vector<double> lo;
    std::vector<double> hi;
    for (std::size_t l = 0; l < counts.size(); ++l) {
      for (int c = 0; c < counts[l]; ++c) {
        lo.push_back(std::clamp(to_unit(e, components[l].first), 0.0, 1.0));
        hi.push_back(std::clamp(to_unit(e, components[l].second), 0.0, 1.0));
      }
    }
    const GridResult g = sorted_grid_minimize(lo, hi, grid, [&](std::span<const double> x,
                                                                double incumbent) {
      const double cutoff = std::min(incumbent, best_value);
      return upper_value(p, NodeSystem({x.begin(), x.end()}), ExtReal(cutoff)).value();
    });
    offer(g.nodes.nodes(), g.value);
  }
  UnionConstant out;
  out.value = std::exp(best_value + log_scale(e.hi() - e.lo(), r));
  for (double s : best_nodes) out.nodes.push_back(from_unit(e, s));
  return out;
}

double union_bound_factor(int k, std::span<const double> r) {
  if (k < 1) throw PreconditionError("need at least one component");
  std::vector<double> sorted(r.begin(), r.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const auto take = std::min<std::size_t>(static_cast<std::size_t>(k - 1), sorted.size());
  return std::pow(2.0, std::accumulate(sorted.begin(), sorted.begin() + static_cast<long>(take), 0.0));
}

ConstantComparison compare_constants(const IntervalUnion& e, std::span<const double> r,
                                     const WeightSpec& weight, const SolverOptions& solver,
                                     RestrictedOptions restricted) {
  constexpr double kSlack = 1e-9;
  ConstantComparison c;
  const UnionConstant un = unrestricted_constant(e, r, weight, solver);
  c.unrestricted = un.value;
  c.unrestricted_nodes = un.nodes;
  const auto snapped = snap_to_E(un.nodes, e);
  c.snapped_norm = union_norm(e, r, weight, snapped);
  restricted.seeds.push_back(snapped);
  const UnionConstant re = restricted_constant(e, r, weight, restricted);
  c.restricted = re.value;
  c.restricted_nodes = re.nodes;
  c.bound_factor = union_bound_factor(e.k(), r);
  c.lower_ok = c.unrestricted <= c.restricted + kSlack;
  c.upper_ok = c.restricted <= c.bound_factor * c.unrestricted + kSlack;
  c.snap_ok = c.snapped_norm <= c.bound_factor * c.unrestricted + kSlack;
  return c;
}

}  // namespace equiosc
