#include "equiosc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "equiosc/errors.hpp"
#include "equiosc/sum_translates.hpp"

namespace equiosc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxDim = 4;

struct Incumbent {
  std::vector<double> x;
  double value = kInf;
  std::uint64_t evaluations = 0;

  void offer(std::span<const double> cand, double v) {
    const bool better =
        x.empty() || v < value ||
        (v == value && std::lexicographical_compare(cand.begin(), cand.end(), x.begin(), x.end()));
    if (better) {
      x.assign(cand.begin(), cand.end());
      value = v;
    }
  }
};

/// Enumerates nondecreasing tuples with coordinate 0 restricted to the grid
/// indices [first, last).
void enumerate(const std::vector<std::vector<double>>& axes, int first, int last,
               const GridObjective& objective, Incumbent& best) {
  const std::size_t n = axes.size();
  std::vector<double> x(n);
  std::vector<std::size_t> idx(n, 0);
  // Depth-first walk; idx[d] is the next index to try at depth d.
  std::size_t d = 0;
  idx[0] = static_cast<std::size_t>(first);
  for (;;) {
    const auto& axis = axes[d];
    const std::size_t end = (d == 0) ? static_cast<std::size_t>(last) : axis.size();
    while (idx[d] < end && d > 0 && axis[idx[d]] < x[d - 1]) ++idx[d];
    if (idx[d] >= end) {
      if (d == 0) return;
      --d;
      ++idx[d];
      continue;
    }
    x[d] = axis[idx[d]];
    if (d + 1 == n) {
      const double v = objective(x, best.value);
      ++best.evaluations;
      best.offer(x, v);
      ++idx[d];
    } else {
      ++d;
      idx[d] = 0;
    }
  }
}

Incumbent search_round(const std::vector<std::vector<double>>& axes, int threads,
                       const GridObjective& objective) {
  const int first_size = static_cast<int>(axes[0].size());
  threads = std::clamp(threads, 1, first_size);
  if (threads == 1) {
    Incumbent best;
    enumerate(axes, 0, first_size, objective, best);
    return best;
  }
  std::vector<Incumbent> partial(static_cast<std::size_t>(threads));
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      // Interleave-free contiguous chunks keep the reduction deterministic.
      const int a = first_size * t / threads;
      const int b = first_size * (t + 1) / threads;
      pool.emplace_back([&, a, b, t] {
        enumerate(axes, a, b, objective, partial[static_cast<std::size_t>(t)]);
      });
    }
  }
  Incumbent best;
  for (const auto& part : partial) {
    best.evaluations += part.evaluations;
    if (!part.x.empty()) best.offer(part.x, part.value);
  }
  return best;
}

}  // namespace

GridResult sorted_grid_minimize(std::span<const double> lo, std::span<const double> hi,
                                const GridSpec& grid, const GridObjective& objective) {
  const std::size_t n = lo.size();
  if (n == 0 || hi.size() != n) throw PreconditionError("grid box dimension mismatch");
  if (grid.points_per_dim < 2 || grid.refine_rounds < 0) {
    throw PreconditionError("grid needs >= 2 points per dimension and >= 0 rounds");
  }
  const double total = std::pow(static_cast<double>(grid.points_per_dim), static_cast<double>(n)) *
                       (grid.refine_rounds + 1);
  if (total > static_cast<double>(grid.budget)) {
    throw BudgetError("grid search exceeds the evaluation budget");
  }
  std::vector<double> box_lo(lo.begin(), lo.end());
  std::vector<double> box_hi(hi.begin(), hi.end());
  Incumbent best;
  double pitch = 0.0;
  for (int round = 0; round <= grid.refine_rounds; ++round) {
    std::vector<std::vector<double>> axes(n);
    pitch = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const int m = grid.points_per_dim;
      for (int k = 0; k < m; ++k) {
        axes[i].push_back(k == m - 1 ? box_hi[i]
                                     : box_lo[i] + (box_hi[i] - box_lo[i]) * k / (m - 1));
      }
      pitch = std::max(pitch, (box_hi[i] - box_lo[i]) / (m - 1));
    }
    Incumbent r = search_round(axes, grid.threads, objective);
    best.evaluations += r.evaluations;
    if (!r.x.empty()) best.offer(r.x, r.value);
    if (best.x.empty()) throw PreconditionError("grid box contains no sorted tuple");
    for (std::size_t i = 0; i < n; ++i) {
      const double half = (box_hi[i] - box_lo[i]) / 20.0;
      box_lo[i] = std::max(lo[i], best.x[i] - half);
      box_hi[i] = std::min(hi[i], best.x[i] + half);
    }
  }
  GridResult out;
  out.nodes = NodeSystem(best.x);
  out.value = best.value;
  out.final_pitch = pitch;
  out.evaluations = best.evaluations;
  return out;
}

namespace {

void check_dimension(const Problem& p) {
  if (p.n() > kMaxDim) throw BudgetError("grid oracle supports n <= 4");
}

}  // namespace

GridResult grid_minimax(const Problem& p, const GridSpec& grid) {
  check_dimension(p);
  const std::vector<double> lo(static_cast<std::size_t>(p.n()), 0.0);
  const std::vector<double> hi(static_cast<std::size_t>(p.n()), 1.0);
  return sorted_grid_minimize(lo, hi, grid, [&](std::span<const double> x, double incumbent) {
    const ExtReal v = upper_value(p, NodeSystem({x.begin(), x.end()}), ExtReal(incumbent));
    return v.to_double();
  });
}

GridResult grid_maximin(const Problem& p, const GridSpec& grid) {
  check_dimension(p);
  const std::vector<double> lo(static_cast<std::size_t>(p.n()), 0.0);
  const std::vector<double> hi(static_cast<std::size_t>(p.n()), 1.0);
  GridResult r =
      sorted_grid_minimize(lo, hi, grid, [&](std::span<const double> x, double incumbent) {
        // Minimizing -min_j m_j; an incumbent of +inf means none found yet.
        const ExtReal cutoff = std::isinf(incumbent) ? kNegInf : ExtReal(-incumbent);
        const ExtReal v = lower_value(p, NodeSystem({x.begin(), x.end()}), cutoff);
        return v.is_neg_inf() ? kInf : -v.value();
      });
  r.value = -r.value;
  return r;
}

}  // namespace equiosc
