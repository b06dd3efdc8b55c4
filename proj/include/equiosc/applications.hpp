#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "equiosc/equi_solver.hpp"
#include "equiosc/oracle.hpp"

namespace equiosc {

/// c on the piece; c = 0 means the weight vanishes there.
struct WeightConstant {
  double c = 1.0;
};

/// c (t - left)^alpha (right - t)^beta, log-concave on its piece.
struct WeightJacobi {
  double c = 1.0;
  double left = 0.0;
  double alpha = 0.0;
  double right = 1.0;
  double beta = 0.0;
};

struct WeightPiece {
  double lo = 0.0;
  double hi = 1.0;
  std::variant<WeightConstant, WeightJacobi> formula;
};

/// Non-negative upper semicontinuous weight on [a,b], given by closed pieces
/// covering the interval plus optional isolated point values.
class WeightSpec {
 public:
  WeightSpec(double a, double b, std::vector<WeightPiece> pieces,
             std::vector<std::pair<double, double>> point_values = {});
  static WeightSpec unit(double a, double b);

  [[nodiscard]] double a() const { return a_; }
  [[nodiscard]] double b() const { return b_; }
  [[nodiscard]] double operator()(double t) const;
  /// log w transported affinely from [a,b] to [0,1].
  [[nodiscard]] const FieldSpec& log_field() const { return field_; }

 private:
  double a_;
  double b_;
  FieldSpec field_;
};

struct GapProblem {
  std::vector<double> r;
  WeightSpec weight;

  [[nodiscard]] double a() const { return weight.a(); }
  [[nodiscard]] double b() const { return weight.b(); }
  /// Log kernel, log w field, on [0,1].
  [[nodiscard]] Problem to_problem() const;
};

struct GapSolution {
  std::vector<double> nodes;
  std::vector<double> extremal_points;
  double norm = 0.0;
  bool interlaces = false;
  SolveReport report;
};

/// w(t) prod_j |t - x_j|^{r_j}. Throws DomainError outside [a,b].
double gap_eval(std::span<const double> nodes, std::span<const double> r,
                const WeightSpec& weight, double t);

/// The weighted extremal polynomial prod |t - x_j|^{r_j} of least
/// weighted sup norm on [a,b].
GapSolution solve_bojanov(const GapProblem& gap, const SolverOptions& opts = {});

/// For integer exponents nu, checks that w(t_k) prod (t_k - x_j)^{nu_j}
/// equals (-1)^{nu_{k+1} + ... + nu_n} times the common norm at every
/// extremal point, within 1e-9 relative. Throws PreconditionError for
/// non-integer exponents or extremal points that do not interlace.
bool verify_signed_equioscillation(std::span<const double> nodes, std::span<const double> nu,
                                   std::span<const double> extremal_points,
                                   const WeightSpec& weight);

/// Finite union of disjoint closed intervals a_1 < b_1 < a_2 < ... < b_k.
class IntervalUnion {
 public:
  explicit IntervalUnion(std::vector<std::pair<double, double>> components);
  [[nodiscard]] int k() const { return static_cast<int>(components_.size()); }
  [[nodiscard]] const std::vector<std::pair<double, double>>& components() const {
    return components_;
  }
  [[nodiscard]] double lo() const { return components_.front().first; }
  [[nodiscard]] double hi() const { return components_.back().second; }
  [[nodiscard]] bool contains(double t) const;

 private:
  std::vector<std::pair<double, double>> components_;
};

struct UnionConstant {
  double value = 0.0;
  std::vector<double> nodes;
};

/// Problem on the convex hull of E (mapped to [0,1]) with field log(w chi_E).
/// The weight must be defined on the hull.
Problem union_problem(const IntervalUnion& e, std::span<const double> r, const WeightSpec& weight);

/// max over E of w |Q_x|.
double union_norm(const IntervalUnion& e, std::span<const double> r, const WeightSpec& weight,
                  std::span<const double> nodes);

/// Least norm over monic products with real roots anywhere (the hull
/// suffices), via the equioscillation solver.
UnionConstant unrestricted_constant(const IntervalUnion& e, std::span<const double> r,
                                    const WeightSpec& weight, const SolverOptions& opts = {});

/// Moves each node lying in a gap (b_l, a_{l+1}) to the nearer gap end,
/// b_l on ties.
std::vector<double> snap_to_E(std::span<const double> nodes, const IntervalUnion& e);

struct RestrictedOptions {
  int points_per_dim = 200;
  int refine_rounds = 2;
  /// Total evaluations across all component assignments; points_per_dim is
  /// lowered to respect it.
  std::uint64_t eval_budget = 400'000;
  int threads = 1;
  /// Known feasible candidates (nodes in E) evaluated before the grid.
  std::vector<std::vector<double>> seeds;
};

/// Least norm with all roots in E: grid search with refinement over every
/// assignment of node counts to components. Throws BudgetError for n > 4.
UnionConstant restricted_constant(const IntervalUnion& e, std::span<const double> r,
                                  const WeightSpec& weight, const RestrictedOptions& opts = {});

/// 2 raised to the sum of the min(k-1, n) largest exponents.
double union_bound_factor(int k, std::span<const double> r);

struct ConstantComparison {
  double unrestricted = 0.0;
  double restricted = 0.0;
  double bound_factor = 0.0;
  double snapped_norm = 0.0;
  std::vector<double> unrestricted_nodes;
  std::vector<double> restricted_nodes;
  bool lower_ok = false;
  bool upper_ok = false;
  bool snap_ok = false;
};

ConstantComparison compare_constants(const IntervalUnion& e, std::span<const double> r,
                                     const WeightSpec& weight, const SolverOptions& solver = {},
                                     RestrictedOptions restricted = {});

}  // namespace equiosc
