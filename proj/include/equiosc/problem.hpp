#pragma once

#include <span>
#include <vector>

#include "equiosc/field.hpp"
#include "equiosc/kernel.hpp"

namespace equiosc {

/// Ordered node system 0 <= y_1 <= ... <= y_n <= 1 (closed simplex).
/// Indices are 1-based through y(); y(0) = 0 and y(n+1) = 1 are sentinels.
class NodeSystem {
 public:
  NodeSystem() = default;
  /// Throws ValidationError unless the nodes are sorted inside [0,1].
  explicit NodeSystem(std::vector<double> nodes);

  [[nodiscard]] int size() const { return static_cast<int>(nodes_.size()); }
  [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }
  [[nodiscard]] std::span<const double> span() const { return nodes_; }

  /// y_j for 0 <= j <= n+1 with the sentinels.
  [[nodiscard]] double y(int j) const {
    if (j <= 0) return 0.0;
    if (j > size()) return 1.0;
    return nodes_[static_cast<std::size_t>(j - 1)];
  }

  /// Membership in the open simplex: 0 < y_1 < ... < y_n < 1.
  [[nodiscard]] bool strict() const;

  /// Max-norm distance to another system of the same size.
  [[nodiscard]] double distance(const NodeSystem& other) const;

  friend bool operator==(const NodeSystem&, const NodeSystem&) = default;

 private:
  std::vector<double> nodes_;
};

/// The minimax problem: n translates with exponents r_j of a kernel, plus an
/// external field.
class Problem {
 public:
  /// Throws ValidationError on non-positive exponents or an inadmissible field.
  Problem(std::vector<double> r, KernelSpec kernel, FieldSpec field);

  [[nodiscard]] int n() const { return static_cast<int>(r_.size()); }
  [[nodiscard]] const std::vector<double>& r() const { return r_; }
  [[nodiscard]] const KernelSpec& kernel() const { return kernel_; }
  [[nodiscard]] const FieldSpec& field() const { return field_; }

  /// Same problem with another kernel.
  [[nodiscard]] Problem with_kernel(KernelSpec k) const;

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  std::vector<double> r_;
  KernelSpec kernel_;
  FieldSpec field_;
};

}  // namespace equiosc
