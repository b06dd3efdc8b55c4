#pragma once

#include <memory>
#include <string>

#include "equiosc/ext_real.hpp"

namespace equiosc {

enum class KernelVariant {
  kLog,                     // log|t|
  kCappedLog,               // min(0, log|t/a|)
  kSqrtShift,               // sqrt(|t| + 4)
  kTentLog,                 // min(log|10t|, log(10/9 (1 - |t|)))
  kCappedLogPlusQuadratic,  // min(0, log|t/a|) + 1 - 2t^2
  kRegularized,             // base(t) + eta sqrt|t|
};

/// Structural properties of a kernel.
///  - singular: K(0) = -inf
///  - monotone: decreasing on (-1,0), increasing on (0,1)
///  - strictly_monotone: strictly so, on [-1,0) and (0,1]
///  - strictly_concave: strictly concave on (-1,0) and on (0,1)
struct KernelFlags {
  bool singular = false;
  bool monotone = false;
  bool strictly_monotone = false;
  bool strictly_concave = false;

  friend bool operator==(const KernelFlags&, const KernelFlags&) = default;
};

/// A kernel function on [-1,1], concave on each half, with values in
/// R u {-inf}. Only the closed-form variants above can be built, so the
/// flags are known analytically rather than estimated.
class KernelSpec {
 public:
  static KernelSpec log();
  static KernelSpec capped_log(double a);
  static KernelSpec sqrt_shift();
  static KernelSpec tent_log();
  static KernelSpec capped_log_plus_quadratic(double a);
  static KernelSpec regularized(const KernelSpec& base, double eta);

  [[nodiscard]] KernelVariant variant() const { return variant_; }
  /// Cap parameter `a` of the capped-log variants; 0 otherwise.
  [[nodiscard]] double cap() const { return cap_; }
  /// Regularization weight; 0 unless variant() == kRegularized.
  [[nodiscard]] double eta() const { return eta_; }
  /// Underlying kernel of a regularized kernel. Precondition: kRegularized.
  [[nodiscard]] const KernelSpec& base() const;

  [[nodiscard]] const KernelFlags& flags() const { return flags_; }

  /// K(t) for t in [-1,1]; limit values at -1, 0, 1. Throws DomainError
  /// for |t| > 1.
  [[nodiscard]] ExtReal operator()(double t) const;

  /// Same as operator() without the domain check. Callers guarantee |t| <= 1.
  [[nodiscard]] ExtReal eval_unchecked(double t) const;

  /// Human readable name such as "CappedLog(0.25)".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const KernelSpec& a, const KernelSpec& b);

 private:
  KernelSpec(KernelVariant v, KernelFlags f) : variant_(v), flags_(f) {}

  KernelVariant variant_;
  KernelFlags flags_;
  double cap_ = 0.0;
  double eta_ = 0.0;
  std::shared_ptr<const KernelSpec> base_;
};

ExtReal kernel_eval(const KernelSpec& k, double t);
KernelFlags kernel_classify(const KernelSpec& k);

}  // namespace equiosc
