#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "equiosc/problem.hpp"

namespace equiosc::testing {

inline constexpr double kB53 = 0.955671;

inline FieldSpec sqrt_field(double c, double s, double t0) {
  return FieldSpec({FieldPiece{0.0, 1.0, SqrtAffine{c, s, t0}}});
}

/// J = 8 sqrt(1-t), K = SqrtShift, n = 2.
inline Problem singularity_problem() {
  return Problem({1.0, 1.0}, KernelSpec::sqrt_shift(), sqrt_field(8.0, -1.0, 1.0));
}

/// J = sqrt t, K = CappedLog(0.1) + 1 - 2t^2, n = 1.
inline Problem monotonicity_problem() {
  return Problem({1.0}, KernelSpec::capped_log_plus_quadratic(0.1),
                 sqrt_field(1.0, 1.0, 0.0));
}

/// J = indicator of [b,1], K = CappedLog(a), n = 1.
inline Problem strictness_problem(double a = 0.25, double b = kB53) {
  return Problem({1.0}, KernelSpec::capped_log(a),
                 FieldSpec::indicator(b, 1.0, 1.0, 0.0));
}

inline Problem log_problem(int n, double r = 1.0) {
  return Problem(std::vector<double>(static_cast<std::size_t>(n), r),
                 KernelSpec::log(), FieldSpec::zero());
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Uniform sample of the open simplex, rejecting near-coincident nodes.
inline NodeSystem random_strict(std::mt19937_64& rng, int n, double gap = 1e-3) {
  for (;;) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = uniform(rng, 0.0, 1.0);
    std::sort(v.begin(), v.end());
    bool ok = v.front() > gap && v.back() < 1.0 - gap;
    for (std::size_t i = 1; i < v.size(); ++i) ok = ok && v[i] - v[i - 1] > gap;
    if (ok) return NodeSystem(std::move(v));
  }
}

/// Random concave field: one of a constant, a Jacobi-type log weight, or an
/// increasing/decreasing square root, on a single piece.
inline FieldSpec random_concave_field(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:
      return FieldSpec::constant(uniform(rng, -1.0, 1.0));
    case 1:
      return FieldSpec({FieldPiece{
          0.0, 1.0,
          LogOfWeight{uniform(rng, 0.5, 2.0), 0.0, uniform(rng, 0.0, 1.5), 1.0,
                      uniform(rng, 0.0, 1.5)}}});
    case 2:
      return sqrt_field(uniform(rng, 0.0, 2.0), 1.0, 0.0);
    default:
      return sqrt_field(uniform(rng, 0.0, 2.0), -1.0, 1.0);
  }
}

inline std::vector<double> random_exponents(std::mt19937_64& rng, int n) {
  std::vector<double> r(static_cast<std::size_t>(n));
  for (double& x : r) x = uniform(rng, 0.5, 2.0);
  return r;
}

/// Sorted Chebyshev nodes on [0,1] and the log of the minimal sup norm of a
/// monic polynomial of degree n there.
inline std::vector<double> chebyshev_nodes(int n) {
  std::vector<double> v;
  for (int j = 1; j <= n; ++j) {
    v.push_back((1.0 + std::cos((2.0 * j - 1.0) * M_PI / (2.0 * n))) / 2.0);
  }
  std::sort(v.begin(), v.end());
  return v;
}

inline double chebyshev_log_value(int n) { return std::log(2.0 * std::pow(4.0, -n)); }

}  // namespace equiosc::testing
