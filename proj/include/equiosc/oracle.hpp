#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "equiosc/problem.hpp"

namespace equiosc {

/// Grid resolution for brute-force searches. Each refinement round shrinks
/// the search box 10x around the incumbent and re-grids it.
struct GridSpec {
  int points_per_dim = 101;
  int refine_rounds = 2;
  std::uint64_t budget = 100'000'000;
  int threads = 1;
};

struct GridResult {
  NodeSystem nodes;
  double value = 0.0;
  /// Largest grid spacing of the last round.
  double final_pitch = 0.0;
  std::uint64_t evaluations = 0;
};

/// Objective for sorted_grid_minimize. Receives the candidate and the
/// current incumbent value; may return any value above the incumbent once
/// it knows the candidate cannot win.
using GridObjective = std::function<double(std::span<const double>, double incumbent)>;

/// Minimizes `objective` over nondecreasing grid tuples in the box
/// [lo_i, hi_i]. Ties go to the lexicographically smallest tuple. Throws
/// BudgetError when points_per_dim^n * (refine_rounds + 1) exceeds the
/// budget.
GridResult sorted_grid_minimize(std::span<const double> lo, std::span<const double> hi,
                                const GridSpec& grid, const GridObjective& objective);

/// Grid point of the closed simplex minimizing max_j m_j. Requires n <= 4.
GridResult grid_minimax(const Problem& p, const GridSpec& grid = {});

/// Grid point of the closed simplex maximizing min_j m_j. Requires n <= 4.
/// Returns value -inf only if every grid point has a singular interval.
GridResult grid_maximin(const Problem& p, const GridSpec& grid = {});

}  // namespace equiosc
