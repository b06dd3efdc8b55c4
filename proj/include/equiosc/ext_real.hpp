#pragma once

#include <compare>
#include <iosfwd>
#include <limits>

namespace equiosc {

/// A real number or negative infinity. There is no representation of +inf,
/// and arithmetic never produces NaN: -inf absorbs every finite summand.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  // IEEE -inf maps onto the tagged value so that it never leaks into sums.
  constexpr ExtReal(double v)  // NOLINT(google-explicit-constructor)
      : value_(v), neg_inf_(v < -std::numeric_limits<double>::max()) {}

  static constexpr ExtReal neg_inf() {
    ExtReal r;
    r.neg_inf_ = true;
    return r;
  }

  /// Maps IEEE -inf to neg_inf(). Throws DomainError on NaN or +inf.
  static ExtReal from_double(double v);

  [[nodiscard]] constexpr bool is_neg_inf() const { return neg_inf_; }
  [[nodiscard]] constexpr bool is_finite() const { return !neg_inf_; }

  /// Finite value. Throws DomainError when called on -inf.
  [[nodiscard]] double value() const;

  /// IEEE view: -infinity for neg_inf(). Only for output and plotting.
  [[nodiscard]] double to_double() const;

  friend constexpr ExtReal operator+(ExtReal a, ExtReal b) {
    if (a.neg_inf_ || b.neg_inf_) return neg_inf();
    return ExtReal(a.value_ + b.value_);
  }
  ExtReal& operator+=(ExtReal o) { return *this = *this + o; }

  /// Scaling by a positive factor.
  friend constexpr ExtReal scale(double positive, ExtReal a) {
    if (a.neg_inf_) return a;
    return ExtReal(positive * a.value_);
  }

  friend constexpr bool operator==(ExtReal a, ExtReal b) {
    if (a.neg_inf_ || b.neg_inf_) return a.neg_inf_ == b.neg_inf_;
    return a.value_ == b.value_;
  }
  friend constexpr std::partial_ordering operator<=>(ExtReal a, ExtReal b) {
    if (a.neg_inf_ && b.neg_inf_) return std::partial_ordering::equivalent;
    if (a.neg_inf_) return std::partial_ordering::less;
    if (b.neg_inf_) return std::partial_ordering::greater;
    return a.value_ <=> b.value_;
  }

 private:
  double value_ = 0.0;
  bool neg_inf_ = false;
};

inline constexpr ExtReal kNegInf = ExtReal::neg_inf();

/// Difference of two extended reals where at least the subtrahend is finite.
double finite_difference(ExtReal a, ExtReal b);

ExtReal max(ExtReal a, ExtReal b);
ExtReal min(ExtReal a, ExtReal b);

/// log of a non-negative number; log 0 is neg_inf().
ExtReal ext_log(double x);

std::ostream& operator<<(std::ostream& os, ExtReal x);

}  // namespace equiosc
