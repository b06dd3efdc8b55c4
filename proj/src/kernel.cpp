#include "equiosc/kernel.hpp"

#include <cmath>
#include <sstream>

#include "equiosc/errors.hpp"

namespace equiosc {
namespace {

ExtReal capped_log_value(double a, double u) {
  if (u >= a) return 0.0;
  if (u == 0.0) return kNegInf;
  return std::log(u / a);
}

}  // namespace

KernelSpec KernelSpec::log() {
  return KernelSpec(KernelVariant::kLog, {true, true, true, true});
}

KernelSpec KernelSpec::capped_log(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw ValidationError("CappedLog parameter must lie in (0,1)");
  }
  KernelSpec k(KernelVariant::kCappedLog, {true, true, false, false});
  k.cap_ = a;
  return k;
}

KernelSpec KernelSpec::sqrt_shift() {
  return KernelSpec(KernelVariant::kSqrtShift, {false, true, true, true});
}

KernelSpec KernelSpec::tent_log() {
  return KernelSpec(KernelVariant::kTentLog, {true, false, false, true});
}

KernelSpec KernelSpec::capped_log_plus_quadratic(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw ValidationError("CappedLogPlusQuadratic parameter must lie in (0,1)");
  }
  KernelSpec k(KernelVariant::kCappedLogPlusQuadratic,
               {true, false, false, true});
  k.cap_ = a;
  return k;
}

KernelSpec KernelSpec::regularized(const KernelSpec& base, double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw ValidationError("regularization weight must be positive");
  }
  // sqrt|t| is strictly concave and strictly monotone, so adding it to a
  // monotone kernel yields a strictly monotone one.
  const KernelFlags& b = base.flags();
  KernelSpec k(KernelVariant::kRegularized,
               {b.singular, b.monotone, b.monotone, true});
  k.eta_ = eta;
  k.base_ = std::make_shared<const KernelSpec>(base);
  return k;
}

const KernelSpec& KernelSpec::base() const {
  if (!base_) throw PreconditionError("kernel has no base: not regularized");
  return *base_;
}

ExtReal KernelSpec::operator()(double t) const {
  if (!(t >= -1.0 && t <= 1.0)) {
    throw DomainError("kernel argument outside [-1,1]");
  }
  return eval_unchecked(t);
}

ExtReal KernelSpec::eval_unchecked(double t) const {
  const double u = std::fabs(t);
  switch (variant_) {
    case KernelVariant::kLog:
      if (u == 0.0) return kNegInf;
      return std::log(u);
    case KernelVariant::kCappedLog:
      return capped_log_value(cap_, u);
    case KernelVariant::kSqrtShift:
      return std::sqrt(u + 4.0);
    case KernelVariant::kTentLog:
      // The two branches cross at |t| = 1/10 where both vanish.
      if (u == 0.0 || u >= 1.0) return kNegInf;
      if (u <= 0.1) return std::log(10.0 * u);
      return std::log(10.0 * (1.0 - u) / 9.0);
    case KernelVariant::kCappedLogPlusQuadratic:
      return capped_log_value(cap_, u) + ExtReal(1.0 - 2.0 * u * u);
    case KernelVariant::kRegularized:
      return base_->eval_unchecked(t) + ExtReal(eta_ * std::sqrt(u));
  }
  return kNegInf;
}

std::string KernelSpec::name() const {
  std::ostringstream os;
  os.precision(9);
  switch (variant_) {
    case KernelVariant::kLog: return "Log";
    case KernelVariant::kCappedLog: os << "CappedLog(" << cap_ << ")"; break;
    case KernelVariant::kSqrtShift: return "SqrtShift";
    case KernelVariant::kTentLog: return "TentLog";
    case KernelVariant::kCappedLogPlusQuadratic:
      os << "CappedLogPlusQuadratic(" << cap_ << ")";
      break;
    case KernelVariant::kRegularized:
      os << "Regularized(" << base_->name() << ", " << eta_ << ")";
      break;
  }
  return os.str();
}

bool operator==(const KernelSpec& a, const KernelSpec& b) {
  if (a.variant_ != b.variant_ || a.cap_ != b.cap_ || a.eta_ != b.eta_) {
    return false;
  }
  if (a.base_ && b.base_) return *a.base_ == *b.base_;
  return !a.base_ && !b.base_;
}

ExtReal kernel_eval(const KernelSpec& k, double t) { return k(t); }

KernelFlags kernel_classify(const KernelSpec& k) { return k.flags(); }

}  // namespace equiosc
