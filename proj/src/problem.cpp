#include "equiosc/problem.hpp"

#include <cmath>

#include "equiosc/errors.hpp"

namespace equiosc {

NodeSystem::NodeSystem(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  double prev = 0.0;
  for (double y : nodes_) {
    if (!(y >= prev && y <= 1.0)) {
      throw ValidationError("node system must be sorted inside [0,1]");
    }
    prev = y;
  }
}

bool NodeSystem::strict() const {
  for (int j = 1; j <= size() + 1; ++j) {
    if (!(y(j - 1) < y(j))) return false;
  }
  return true;
}

double NodeSystem::distance(const NodeSystem& other) const {
  if (other.size() != size()) {
    throw PreconditionError("node systems of different sizes");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    d = std::max(d, std::fabs(nodes_[i] - other.nodes_[i]));
  }
  return d;
}

Problem::Problem(std::vector<double> r, KernelSpec kernel, FieldSpec field)
    : r_(std::move(r)), kernel_(std::move(kernel)), field_(std::move(field)) {
  if (r_.empty()) throw ValidationError("need at least one node (n >= 1)");
  for (double rj : r_) {
    if (!(rj > 0.0) || !std::isfinite(rj)) {
      throw ValidationError("exponents r_j must be positive");
    }
  }
  if (!field_admissible(field_, n())) {
    throw ValidationError("field is finite at too few points for n nodes");
  }
}

Problem Problem::with_kernel(KernelSpec k) const {
  return Problem(r_, std::move(k), field_);
}

}  // namespace equiosc
