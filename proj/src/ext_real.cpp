#include "equiosc/ext_real.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "equiosc/errors.hpp"

namespace equiosc {

ExtReal ExtReal::from_double(double v) {
  if (std::isnan(v)) throw DomainError("NaN is not an extended real");
  if (v == std::numeric_limits<double>::infinity()) {
    throw DomainError("+inf is not an extended real");
  }
  if (v == -std::numeric_limits<double>::infinity()) return neg_inf();
  return ExtReal(v);
}

double ExtReal::value() const {
  if (neg_inf_) throw DomainError("value() called on -inf");
  return value_;
}

double ExtReal::to_double() const {
  return neg_inf_ ? -std::numeric_limits<double>::infinity() : value_;
}

double finite_difference(ExtReal a, ExtReal b) {
  if (a.is_neg_inf() || b.is_neg_inf()) {
    throw DomainError("difference of extended reals involving -inf");
  }
  return a.value() - b.value();
}

ExtReal max(ExtReal a, ExtReal b) { return a < b ? b : a; }
ExtReal min(ExtReal a, ExtReal b) { return b < a ? b : a; }

ExtReal ext_log(double x) {
  if (x < 0.0 || std::isnan(x)) throw DomainError("log of a negative number");
  if (x == 0.0) return kNegInf;
  return ExtReal(std::log(x));
}

std::ostream& operator<<(std::ostream& os, ExtReal x) {
  if (x.is_neg_inf()) return os << "-inf";
  return os << x.value();
}

}  // namespace equiosc
