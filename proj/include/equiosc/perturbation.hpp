#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "equiosc/sum_translates.hpp"

namespace equiosc {

/// Two translates moved from (outer_left, outer_right) to the inner pair
/// (inner_left, inner_right), weighted by left_weight and right_weight:
/// 0 < outer_left < inner_left < inner_right < outer_right < 1.
struct TranslatePair {
  double outer_left = 0.0;
  double inner_left = 0.0;
  double inner_right = 0.0;
  double outer_right = 0.0;
  double left_weight = 1.0;
  double right_weight = 1.0;
};

enum class PerturbationCase { kOutsideLeft, kOutsideRight, kBalanced, kStrict, kInside };

struct CaseReport {
  PerturbationCase which{};
  /// Whether the case's hypotheses hold for this kernel and pair.
  bool applicable = false;
  bool passed = true;
  /// Largest amount by which the inequality failed (<= 0 when it held); for
  /// the strict case, the largest of lhs - rhs, which must stay negative.
  double worst_violation = -std::numeric_limits<double>::infinity();
  int samples = 0;
};

struct PerturbationReport {
  /// Balance ratio left_weight (inner_left - outer_left) /
  /// (right_weight (outer_right - inner_right)).
  double mu = 0.0;
  std::array<CaseReport, 5> cases{};

  [[nodiscard]] bool all_passed() const;
  [[nodiscard]] const CaseReport& at(PerturbationCase c) const {
    return cases[static_cast<std::size_t>(c)];
  }
};

/// Samples the comparison between the outer pair sum
///   p K(t - outer_left) + q K(t - outer_right)
/// and the inner pair sum on the sets where it has a definite sign:
/// outer <= inner on [0, outer_left] (monotone, mu >= 1), on
/// [outer_right, 1] (monotone, mu <= 1), on both (mu = 1), strictly for
/// strictly concave kernels, and outer >= inner on [inner_left, inner_right]
/// (monotone; strict when strictly monotone). Throws PreconditionError when
/// the pair is not nested as documented.
PerturbationReport check_interval_perturbation(const KernelSpec& k, const TranslatePair& pair,
                                              int grid_points);

enum class IntervalClass { kShrink, kGrow };

/// Labels each interval I_0..I_n as shrinking ("I" class) or growing ("J").
struct PartitionSpec {
  std::vector<IntervalClass> class_of;
  /// Throws ValidationError unless both classes occur.
  explicit PartitionSpec(std::vector<IntervalClass> classes);
  [[nodiscard]] int intervals() const { return static_cast<int>(class_of.size()); }
};

/// Moves the boundary nodes between intervals of different classes so that
/// shrinking intervals get smaller and growing ones larger: node l moves by
/// +h / r_l between a growing and a shrinking interval, by -h / r_l between
/// a shrinking and a growing one, and stays put between equal classes.
/// Throws PreconditionError if w is not strictly ordered or h breaks the
/// ordering.
NodeSystem perturb_partition(const Problem& p, const NodeSystem& w,
                             const PartitionSpec& partition, double h);

enum class MajorizationDirection { kXBelowY, kXAboveY, kTied };

struct IntertwiningVerdict {
  enum class Kind { kEqual, kWitness, kMajorizationViolation };
  Kind kind = Kind::kEqual;
  /// Witness indices: m_i(x) < m_i(y) and m_j(x) > m_j(y) beyond tolerance.
  int i = -1;
  int j = -1;
  MajorizationDirection direction = MajorizationDirection::kTied;
};

inline constexpr double kStrictnessTol = 1e-9;

/// Looks for indices where the interval maxima of x and y compare in
/// opposite directions. Throws RegularityError unless both are regular.
IntertwiningVerdict check_intertwining(const Problem& p, const NodeSystem& x,
                                       const NodeSystem& y);

struct MajorizationReport {
  /// Singular and monotone kernel. When false the census still runs, as a
  /// negative control.
  bool hypotheses_hold = false;
  int pairs_checked = 0;
  /// Pairs with m_k(x) > m_k(y) + tol for every k (or the reverse).
  int strict_majorizations = 0;
  /// Pairs where one vector dominates weakly but not strictly, including
  /// exact ties.
  int weak_majorizations = 0;
};

/// Census over the given pairs of regular node systems.
MajorizationReport majorization_census(
    const Problem& p, std::span<const std::pair<NodeSystem, NodeSystem>> pairs);

/// Census over `samples` random pairs drawn from the regularity set.
MajorizationReport check_strict_majorization_excluded(const Problem& p, int samples,
                                                      std::uint64_t seed = 1);

}  // namespace equiosc
