#pragma once

#include <optional>
#include <span>
#include <vector>

#include "equiosc/errors.hpp"
#include "equiosc/sum_translates.hpp"

namespace equiosc {

/// Trace of the regularized solves used for kernels that are monotone but
/// not strictly monotone.
struct RegularizationTrace {
  std::vector<double> etas;
  std::vector<NodeSystem> solutions;
  NodeSystem extrapolated;
  /// Whether the final polish with the unregularized kernel converged.
  bool polished = false;
};

struct SolveReport {
  NodeSystem nodes;
  MaximaVector maxima;
  std::vector<double> target;
  /// max_j |Phi_j(w) - c_j|.
  double residual = 0.0;
  /// Largest interval maximum at the solution.
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  /// Set when the kernel is not strictly monotone: the preimage may not be
  /// unique and `nodes` is the limit of regularized solutions.
  bool non_uniqueness_risk = false;
  std::optional<RegularizationTrace> regularization;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, SolveReport report)
      : Error(what), report_(std::move(report)) {}
  [[nodiscard]] const SolveReport& report() const { return report_; }

 private:
  SolveReport report_;
};

struct SolverOptions {
  double tol = 1e-9;
  int max_sweeps = 500;
  /// Residual below which sweeps hand over to damped Newton.
  double newton_switch = 1e-3;
  double fd_step = 1e-7;
  int max_halvings = 30;
  /// Starting node system; must lie in the regularity set.
  std::optional<NodeSystem> initial;
  /// Regularization weights for kernels that are only monotone.
  std::vector<double> etas{1e-2, 1e-3, 1e-4};
};

/// Default starting point: equispaced nodes, or midpoints between spread
/// points where the field is finite when equispacing is not regular.
NodeSystem initial_nodes(const Problem& p);

/// Finds w in the regularity set with Phi(w) = c. Requires a singular
/// kernel that is strictly monotone, or monotone (solved through
/// regularization, with non_uniqueness_risk set). Throws HypothesisError
/// otherwise and ConvergenceError when the iteration budget runs out.
SolveReport solve_difference(const Problem& p, std::span<const double> target,
                             const SolverOptions& opts = {});

/// The equioscillation point, c = 0. Its value is the minimax and maximin
/// value of the problem.
SolveReport solve_equioscillation(const Problem& p, const SolverOptions& opts = {});

struct SandwichResult {
  bool lower_ok = false;
  bool upper_ok = false;
};

/// min_j m_j(x) <= value <= max_j m_j(x), with 1e-9 slack.
SandwichResult sandwich_check(const Problem& p, const NodeSystem& x, double value);

/// Polynomial extrapolation to zero (Neville) of samples (xs[i], ys[i]).
double extrapolate_to_zero(std::span<const double> xs, std::span<const double> ys);

}  // namespace equiosc
