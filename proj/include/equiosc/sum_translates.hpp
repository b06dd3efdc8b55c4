#pragma once

#include <optional>
#include <vector>

#include "equiosc/problem.hpp"

namespace equiosc {

/// Interval maxima m_j(y) = sup over [y_j, y_{j+1}] of F(y, .), j = 0..n,
/// with a location attaining each finite maximum.
struct MaximaVector {
  std::vector<ExtReal> m;
  std::vector<std::optional<double>> argmax;

  /// max_j m_j, always finite for an admissible problem.
  [[nodiscard]] ExtReal upper() const;
  /// min_j m_j.
  [[nodiscard]] ExtReal lower() const;
};

/// Phi_j = m_j - m_{j-1}, j = 1..n; only defined when every m_j is finite.
struct DifferenceVector {
  std::vector<double> phi;
};

enum class MaxStrategy {
  /// Golden-section search on every concave sub-piece between field
  /// breakpoints, plus the breakpoints and interval ends as candidates.
  kPiecewiseGolden,
  /// Uniform sampling plus the same candidates. Slow, for cross-checks.
  kDenseSampling,
};

struct MaximizeOptions {
  MaxStrategy strategy = MaxStrategy::kPiecewiseGolden;
  double width_tol = 1e-12;
  int samples = 100000;
};

struct IntervalMax {
  double t = 0.0;
  ExtReal value = kNegInf;
};

/// Pure sum of translates f(y,t) = sum_j r_j K(t - y_j).
ExtReal eval_f(const Problem& p, const NodeSystem& y, double t);

/// F(y,t) = J(t) + f(y,t).
ExtReal eval_F(const Problem& p, const NodeSystem& y, double t);

/// Maximum of F(y,.) on I_j(y) and the leftmost location attaining it.
IntervalMax maximize_on_interval(const Problem& p, const NodeSystem& y, int j,
                                 const MaximizeOptions& opts = {});

MaximaVector interval_maxima(const Problem& p, const NodeSystem& y,
                             const MaximizeOptions& opts = {});

/// Largest interval maximum. Stops as soon as some m_j exceeds `cutoff`, so
/// a result above the cutoff is only a lower bound. Used by grid searches.
ExtReal upper_value(const Problem& p, const NodeSystem& y,
                    ExtReal cutoff = ExtReal(std::numeric_limits<double>::max()));

/// Smallest interval maximum. Stops as soon as some m_j falls below
/// `cutoff`, so a result below the cutoff is only an upper bound.
ExtReal lower_value(const Problem& p, const NodeSystem& y, ExtReal cutoff = kNegInf);

/// Membership in the regularity set: y strictly ordered and no relative
/// interior of an interval I_j(y) lies inside {J = -inf}. Throws
/// HypothesisError for a non-singular kernel.
bool in_regularity_set(const Problem& p, const NodeSystem& y);

/// Phi(y). Throws RegularityError unless y is strictly ordered with every
/// interval maximum finite (for singular kernels: y in Y).
DifferenceVector difference(const Problem& p, const NodeSystem& y,
                            const MaximizeOptions& opts = {});

/// Phi computed from an already evaluated maxima vector.
DifferenceVector difference_from_maxima(const MaximaVector& mv);

}  // namespace equiosc
