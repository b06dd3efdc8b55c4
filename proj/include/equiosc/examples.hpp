#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "equiosc/problem.hpp"

namespace equiosc {

/// One computed quantity next to its closed-form value.
struct ExampleRow {
  std::string quantity;
  double computed = 0.0;
  double expected = 0.0;
  [[nodiscard]] double deviation() const;
};

struct ExampleReport {
  std::string id;
  std::vector<ExampleRow> rows;
  [[nodiscard]] double max_deviation() const;
  [[nodiscard]] bool ok(double tol = 1e-6) const { return max_deviation() <= tol; }
};

/// singularity, monotonicity, strictness, nonmonotone, classical_chebyshev,
/// quartics.
std::vector<std::string> example_ids();

/// The built-in problem behind an example id. `n` is only used by
/// classical_chebyshev. Throws ValidationError for unknown ids.
Problem example_problem(std::string_view id, int n = 3);

/// Runs the library on an example and tabulates it against closed forms.
ExampleReport run_example(std::string_view id, int n = 3);

}  // namespace equiosc
