#pragma once

#include <variant>
#include <vector>

#include "equiosc/ext_real.hpp"

namespace equiosc {

// Closed-form piece formulas. Every formula is concave on its piece, which
// is what lets interval maximization run golden-section search piecewise.

struct Constant {
  double c = 0.0;
  friend bool operator==(const Constant&, const Constant&) = default;
};

struct NegInfinity {
  friend bool operator==(const NegInfinity&, const NegInfinity&) = default;
};

/// log( c (t - left)^alpha (right - t)^beta ), a log-concave Jacobi-type
/// weight. Requires c > 0, alpha, beta >= 0, left <= lo and right >= hi of
/// its piece.
struct LogOfWeight {
  double c = 1.0;
  double left = 0.0;
  double alpha = 0.0;
  double right = 1.0;
  double beta = 0.0;
  friend bool operator==(const LogOfWeight&, const LogOfWeight&) = default;
};

/// c sqrt(s (t - t0)), with c >= 0 and s (t - t0) >= 0 on the piece.
struct SqrtAffine {
  double c = 1.0;
  double s = 1.0;
  double t0 = 0.0;
  friend bool operator==(const SqrtAffine&, const SqrtAffine&) = default;
};

/// Value taken by an indicator-type field on this piece.
struct Indicator {
  double value = 1.0;
  friend bool operator==(const Indicator&, const Indicator&) = default;
};

using FieldFormula =
    std::variant<Constant, NegInfinity, LogOfWeight, SqrtAffine, Indicator>;

/// Formula value at t (continuous extension to the closed piece).
ExtReal formula_eval(const FieldFormula& f, double t);

struct FieldPiece {
  double lo = 0.0;
  double hi = 1.0;
  FieldFormula formula;
  friend bool operator==(const FieldPiece&, const FieldPiece&) = default;
};

struct PointValue {
  double t = 0.0;
  ExtReal value;
  friend bool operator==(const PointValue&, const PointValue&) = default;
};

/// A maximal connected piece of the singularity set {J = -inf}. An isolated
/// point has lo == hi with both ends closed.
struct SingularComponent {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = false;
  bool hi_closed = false;
  friend bool operator==(const SingularComponent&,
                         const SingularComponent&) = default;
};

/// Upper semicontinuous field function on [0,1], stored as closed pieces
/// with pairwise disjoint interiors plus isolated point values.
///
/// The value at t is the maximum over the formulas of all pieces containing
/// t and any point value at t. At a breakpoint that is the larger one-sided
/// limit, so the represented function is usc by construction; point values
/// can only raise the function.
class FieldSpec {
 public:
  FieldSpec(std::vector<FieldPiece> pieces,
            std::vector<PointValue> point_values = {});

  static FieldSpec zero();
  static FieldSpec constant(double c);
  /// `inside` on [lo, hi] (closed), `outside` elsewhere.
  static FieldSpec indicator(double lo, double hi, double inside,
                             double outside);
  /// log of the indicator of a finite union of closed intervals: 0 on the
  /// intervals, -inf on the gaps. `bounds` lists lo1, hi1, lo2, hi2, ...
  static FieldSpec log_indicator(const std::vector<double>& bounds);

  [[nodiscard]] ExtReal operator()(double t) const;

  [[nodiscard]] const std::vector<FieldPiece>& pieces() const {
    return pieces_;
  }
  [[nodiscard]] const std::vector<PointValue>& point_values() const {
    return point_values_;
  }

  /// Sorted, de-duplicated piece endpoints and point-value locations,
  /// including 0 and 1.
  [[nodiscard]] const std::vector<double>& special_points() const {
    return special_;
  }

  /// Formula of the piece whose interior contains t; at a breakpoint, the
  /// piece to the right (the last piece for t = 1).
  [[nodiscard]] const FieldFormula& formula_at(double t) const;

  /// True if the whole field is a single piece of one formula and there are
  /// no point values; then J is continuous and concave on [0,1].
  [[nodiscard]] bool is_single_piece() const {
    return pieces_.size() == 1 && point_values_.empty();
  }

  /// Maximal components of {J = -inf}, computed once at construction.
  [[nodiscard]] const std::vector<SingularComponent>& singular_components()
      const {
    return singular_;
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.pieces_ == b.pieces_ && a.point_values_ == b.point_values_;
  }

 private:
  std::vector<SingularComponent> compute_singular_components() const;

  std::vector<FieldPiece> pieces_;
  std::vector<PointValue> point_values_;
  std::vector<double> special_;
  std::vector<SingularComponent> singular_;
};

ExtReal field_eval(const FieldSpec& j, double t);

/// Weighted count of finiteness points exceeds n; 0 and 1 weigh 1/2, a
/// finite piece of positive length counts as infinitely many points.
bool field_admissible(const FieldSpec& j, int n);

/// The set {t : J(t) = -inf} as sorted maximal components.
std::vector<SingularComponent> singularity_set(const FieldSpec& j);

}  // namespace equiosc
