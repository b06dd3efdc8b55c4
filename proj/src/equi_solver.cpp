#include "equiosc/equi_solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace equiosc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBracketGap = 1e-12;

/// Extended residual bookkeeping for one evaluation of Phi at w.
struct Evaluation {
  MaximaVector maxima;
  std::vector<double> g;  // Phi_j - c_j
  double residual = kInf;
  bool regular = false;
};

Evaluation evaluate(const Problem& p, const NodeSystem& w, std::span<const double> c) {
  Evaluation e;
  e.maxima = interval_maxima(p, w);
  e.regular = w.strict() && std::all_of(e.maxima.m.begin(), e.maxima.m.end(),
                                        [](ExtReal v) { return v.is_finite(); });
  if (!e.regular) return e;
  e.residual = 0.0;
  for (int j = 1; j <= w.size(); ++j) {
    const auto k = static_cast<std::size_t>(j);
    const double gj = e.maxima.m[k].value() - e.maxima.m[k - 1].value() - c[k - 1];
    e.g.push_back(gj);
    e.residual = std::max(e.residual, std::abs(gj));
  }
  return e;
}

bool regular(const Problem& p, const NodeSystem& w) {
  return w.strict() && in_regularity_set(p, w);
}

/// Local residual m_j - m_{j-1} - c_j as a function of node j alone, with
/// the extended signs +inf (interval j-1 singular) and -inf (interval j
/// singular). Strictly decreasing in the node position.
double local_residual(const Problem& p, std::vector<double>& w, int j, double pos,
                      double cj) {
  w[static_cast<std::size_t>(j - 1)] = pos;
  const NodeSystem y(w);
  const ExtReal left = maximize_on_interval(p, y, j - 1).value;
  const ExtReal right = maximize_on_interval(p, y, j).value;
  if (left.is_neg_inf() && right.is_neg_inf()) return 0.0;
  if (left.is_neg_inf()) return kInf;
  if (right.is_neg_inf()) return -kInf;
  return right.value() - left.value() - cj;
}

void sweep(const Problem& p, std::vector<double>& w, std::span<const double> c) {
  const int n = static_cast<int>(w.size());
  for (int j = 1; j <= n; ++j) {
    const double lower = (j == 1 ? 0.0 : w[static_cast<std::size_t>(j - 2)]) + kBracketGap;
    const double upper = (j == n ? 1.0 : w[static_cast<std::size_t>(j)]) - kBracketGap;
    if (!(lower < upper)) continue;
    const double cj = c[static_cast<std::size_t>(j - 1)];
    double lo = lower;
    double hi = upper;
    const double g_lo = local_residual(p, w, j, lo, cj);
    const double g_hi = local_residual(p, w, j, hi, cj);
    double best = 0.5 * (lo + hi);
    if (g_lo <= 0.0) {
      best = lo;
    } else if (g_hi >= 0.0) {
      best = hi;
    } else {
      while (hi - lo > 1e-15 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double g = local_residual(p, w, j, mid, cj);
        if (g == 0.0) {
          lo = hi = mid;
          break;
        }
        (g > 0.0 ? lo : hi) = mid;
      }
      best = 0.5 * (lo + hi);
    }
    w[static_cast<std::size_t>(j - 1)] = best;
  }
}

/// One damped Newton step. Returns false when no step decreases the
/// residual while staying in the regularity set.
bool newton_step(const Problem& p, std::vector<double>& w, std::span<const double> c,
                 Evaluation& cur, const SolverOptions& opts) {
  const int n = static_cast<int>(w.size());
  Eigen::MatrixXd jac(n, n);
  Eigen::VectorXd g(n);
  for (int i = 0; i < n; ++i) g(i) = cur.g[static_cast<std::size_t>(i)];
  for (int k = 0; k < n; ++k) {
    std::vector<double> shifted = w;
    const auto kk = static_cast<std::size_t>(k);
    const double room_right = (k + 1 < n ? w[kk + 1] : 1.0) - w[kk];
    const double h = room_right > 2.0 * opts.fd_step ? opts.fd_step : -opts.fd_step;
    shifted[kk] += h;
    const Evaluation e = evaluate(p, NodeSystem(shifted), c);
    if (!e.regular) return false;
    for (int i = 0; i < n; ++i) {
      jac(i, k) = (e.g[static_cast<std::size_t>(i)] - g(i)) / h;
    }
  }
  const Eigen::VectorXd step = jac.partialPivLu().solve(-g);
  if (!step.allFinite()) return false;
  double lambda = 1.0;
  for (int halving = 0; halving <= opts.max_halvings; ++halving, lambda *= 0.5) {
    std::vector<double> trial = w;
    for (int i = 0; i < n; ++i) trial[static_cast<std::size_t>(i)] += lambda * step(i);
    if (!std::is_sorted(trial.begin(), trial.end()) || trial.front() <= 0.0 ||
        trial.back() >= 1.0) {
      continue;
    }
    NodeSystem y(trial);
    if (!regular(p, y)) continue;
    Evaluation e = evaluate(p, y, c);
    if (e.regular && e.residual < cur.residual) {
      w = std::move(trial);
      cur = std::move(e);
      return true;
    }
  }
  return false;
}

SolveReport make_report(const NodeSystem& w, Evaluation e, std::span<const double> c,
                        int iterations, bool converged) {
  SolveReport r;
  r.nodes = w;
  r.target.assign(c.begin(), c.end());
  r.residual = e.residual;
  r.value = e.maxima.upper().is_finite() ? e.maxima.upper().value() : -kInf;
  r.maxima = std::move(e.maxima);
  r.iterations = iterations;
  r.converged = converged;
  return r;
}

/// Sweeps followed by damped Newton, for a singular strictly monotone
/// kernel (or weakly monotone during a polish).
SolveReport solve_core(const Problem& p, std::span<const double> c, const NodeSystem& start,
                       const SolverOptions& opts) {
  std::vector<double> w = start.nodes();
  Evaluation cur = evaluate(p, start, c);
  int iterations = 0;
  for (; iterations < opts.max_sweeps; ++iterations) {
    if (cur.regular && cur.residual <= opts.tol) {
      return make_report(NodeSystem(w), std::move(cur), c, iterations, true);
    }
    if (!(cur.regular && cur.residual < opts.newton_switch &&
          newton_step(p, w, c, cur, opts))) {
      sweep(p, w, c);
      cur = evaluate(p, NodeSystem(w), c);
    }
  }
  if (cur.regular && cur.residual <= opts.tol) {
    return make_report(NodeSystem(w), std::move(cur), c, iterations, true);
  }
  throw ConvergenceError("no convergence within the sweep budget",
                         make_report(NodeSystem(w), std::move(cur), c, iterations, false));
}

void check_target(const Problem& p, std::span<const double> c) {
  if (static_cast<int>(c.size()) != p.n()) {
    throw PreconditionError("target length differs from n");
  }
  for (double v : c) {
    if (!std::isfinite(v)) throw PreconditionError("target must be finite");
  }
}

SolveReport solve_regularized(const Problem& p, std::span<const double> c,
                              const NodeSystem& start, const SolverOptions& opts) {
  if (opts.etas.empty()) throw PreconditionError("no regularization weights given");
  RegularizationTrace trace;
  NodeSystem from = start;
  int iterations = 0;
  for (double eta : opts.etas) {
    const Problem reg = p.with_kernel(KernelSpec::regularized(p.kernel(), eta));
    SolveReport r = solve_core(reg, c, from, opts);
    iterations += r.iterations;
    trace.etas.push_back(eta);
    trace.solutions.push_back(r.nodes);
    from = r.nodes;
  }
  std::vector<double> limit(static_cast<std::size_t>(p.n()));
  for (std::size_t i = 0; i < limit.size(); ++i) {
    std::vector<double> coord;
    for (const auto& s : trace.solutions) coord.push_back(s.nodes()[i]);
    limit[i] = extrapolate_to_zero(trace.etas, coord);
  }
  std::vector<double> extrapolated = limit;
  if (!std::is_sorted(limit.begin(), limit.end()) || limit.front() <= 0.0 ||
      limit.back() >= 1.0 || !regular(p, NodeSystem(limit))) {
    extrapolated = trace.solutions.back().nodes();
  }
  trace.extrapolated = NodeSystem(extrapolated);

  SolveReport out;
  try {
    out = solve_core(p, c, trace.extrapolated, opts);
    trace.polished = true;
  } catch (const ConvergenceError& e) {
    out = e.report();
    out.nodes = trace.extrapolated;
    Evaluation ev = evaluate(p, out.nodes, c);
    out = make_report(out.nodes, std::move(ev), c, out.iterations, false);
  }
  out.iterations += iterations;
  out.non_uniqueness_risk = true;
  out.regularization = std::move(trace);
  if (!out.converged) {
    throw ConvergenceError("regularized solution does not meet the tolerance", out);
  }
  return out;
}

/// Witness points where the field is finite, spread over [0,1].
std::vector<double> finite_witnesses(const FieldSpec& f, int count) {
  std::vector<double> cand;
  for (const auto& piece : f.pieces()) {
    if (std::holds_alternative<NegInfinity>(piece.formula)) continue;
    for (int k = 0; k < count; ++k) {
      cand.push_back(piece.lo + (piece.hi - piece.lo) * (k + 0.5) / count);
    }
  }
  for (double s : f.special_points()) cand.push_back(s);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::erase_if(cand, [&](double t) { return f(t).is_neg_inf(); });
  if (static_cast<int>(cand.size()) < count) {
    throw ValidationError("field is finite at too few points");
  }
  std::vector<double> out;
  const auto last = static_cast<double>(cand.size() - 1);
  for (int i = 0; i < count; ++i) {
    out.push_back(cand[static_cast<std::size_t>(std::lround(last * i / (count - 1)))]);
  }
  return out;
}

}  // namespace

double extrapolate_to_zero(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw PreconditionError("extrapolation needs matching non-empty samples");
  }
  std::vector<double> p(ys.begin(), ys.end());
  const std::size_t m = xs.size();
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = 0; i + level < m; ++i) {
      const double xi = xs[i];
      const double xj = xs[i + level];
      p[i] = (xj * p[i] - xi * p[i + 1]) / (xj - xi);
    }
  }
  return p[0];
}

NodeSystem initial_nodes(const Problem& p) {
  const int n = p.n();
  std::vector<double> w;
  for (int j = 1; j <= n; ++j) w.push_back(static_cast<double>(j) / (n + 1));
  NodeSystem y(w);
  if (!p.kernel().flags().singular || in_regularity_set(p, y)) return y;
  const auto t = finite_witnesses(p.field(), n + 1);
  for (int j = 0; j < n; ++j) {
    w[static_cast<std::size_t>(j)] =
        0.5 * (t[static_cast<std::size_t>(j)] + t[static_cast<std::size_t>(j + 1)]);
  }
  return NodeSystem(w);
}

SolveReport solve_difference(const Problem& p, std::span<const double> target,
                             const SolverOptions& opts) {
  check_target(p, target);
  const KernelFlags& flags = p.kernel().flags();
  if (!flags.singular || !flags.monotone) {
    throw HypothesisError("solver needs a singular, monotone kernel; got " + p.kernel().name());
  }
  const NodeSystem start = opts.initial ? *opts.initial : initial_nodes(p);
  if (start.size() != p.n()) throw PreconditionError("initial node count differs from n");
  if (!regular(p, start)) throw RegularityError("initial nodes outside the regularity set");
  if (!flags.strictly_monotone) return solve_regularized(p, target, start, opts);
  return solve_core(p, target, start, opts);
}

SolveReport solve_equioscillation(const Problem& p, const SolverOptions& opts) {
  const std::vector<double> zero(static_cast<std::size_t>(p.n()), 0.0);
  return solve_difference(p, zero, opts);
}

SandwichResult sandwich_check(const Problem& p, const NodeSystem& x, double value) {
  constexpr double kSlack = 1e-9;
  const MaximaVector mv = interval_maxima(p, x);
  return {mv.lower() <= ExtReal(value + kSlack), ExtReal(value) <= mv.upper() + kSlack};
}

}  // namespace equiosc
