// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion also has a wall-clock limit.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "equiosc/applications.hpp"
#include "equiosc/equi_solver.hpp"
#include "equiosc/oracle.hpp"
#include "equiosc/perturbation.hpp"
#include "equiosc/sum_translates.hpp"
#include "support.hpp"

using namespace equiosc;
using namespace equiosc::testing;

namespace {

using Clock = std::chrono::steady_clock;

/// Collects failed checks of one criterion.
class Findings {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  [[nodiscard]] bool ok() const { return failed_ == 0; }
  [[nodiscard]] std::string summary() const {
    std::ostringstream out;
    out << checks_ - failed_ << "/" << checks_ << " checks";
    if (!notes_.empty()) out << "; " << notes_;
    for (const auto& f : failures_) out << "\n      failed: " << f;
    return out.str();
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Findings&)> body;
};

std::vector<double> random_target(std::mt19937_64& rng, int n) {
  std::vector<double> c(static_cast<std::size_t>(n));
  for (double& x : c) x = uniform(rng, -3.0, 3.0);
  return c;
}

Problem random_sm_problem(std::mt19937_64& rng, int n) {
  return Problem(random_exponents(rng, n), KernelSpec::log(), random_concave_field(rng));
}

NodeSystem random_closed(std::mt19937_64& rng, int n) {
  std::vector<double> y(static_cast<std::size_t>(n));
  for (double& v : y) v = uniform(rng, 0.0, 1.0);
  std::sort(y.begin(), y.end());
  return NodeSystem(y);
}

/// k disjoint closed intervals in [0,1], each at least 0.05 long, separated
/// by gaps at least 0.05 wide.
IntervalUnion random_union(std::mt19937_64& rng, int k) {
  for (;;) {
    std::vector<double> cuts(static_cast<std::size_t>(2 * k));
    for (double& c : cuts) c = uniform(rng, 0.0, 1.0);
    std::sort(cuts.begin(), cuts.end());
    cuts.front() = uniform(rng, 0.0, 0.1) * (rng() % 2);
    cuts.back() = 1.0 - uniform(rng, 0.0, 0.1) * (rng() % 2);
    bool spread = true;
    for (std::size_t i = 1; i < cuts.size(); ++i) spread = spread && cuts[i] - cuts[i - 1] >= 0.05;
    if (!spread) continue;
    std::vector<std::pair<double, double>> comps;
    for (std::size_t i = 0; i < cuts.size(); i += 2) comps.emplace_back(cuts[i], cuts[i + 1]);
    return IntervalUnion(comps);
  }
}

TranslatePair random_pair(std::mt19937_64& rng, bool balanced) {
  for (;;) {
    TranslatePair tp;
    tp.left_weight = uniform(rng, 0.5, 2.0);
    tp.right_weight = uniform(rng, 0.5, 2.0);
    tp.outer_left = uniform(rng, 0.02, 0.5);
    tp.inner_left = tp.outer_left + uniform(rng, 0.01, 0.2);
    tp.inner_right = tp.inner_left + uniform(rng, 0.01, 0.3);
    tp.outer_right = balanced ? tp.inner_right + tp.left_weight * (tp.inner_left - tp.outer_left) /
                                                     tp.right_weight
                              : tp.inner_right + uniform(rng, 0.01, 0.3);
    if (tp.outer_right < 0.98) return tp;
  }
}

void classical_chebyshev(Findings& f) {
  double slowest = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const auto start = Clock::now();
    const SolveReport r = solve_equioscillation(log_problem(n));
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    slowest = std::max(slowest, secs);
    const auto expect = chebyshev_nodes(n);
    f.expect(r.nodes.distance(NodeSystem(expect)) <= 1e-8, "nodes n=" + std::to_string(n));
    f.expect(std::abs(r.value - chebyshev_log_value(n)) <= 1e-8, "value n=" + std::to_string(n));
    f.expect(secs < 1.0, "solve time n=" + std::to_string(n));
  }
  f.note("slowest solve " + fmt(slowest) + " s");
}

void strictness_regression(Findings& f) {
  const double a = 0.25;
  const Problem p = strictness_problem(a, kB53);
  const SolveReport r = solve_equioscillation(p);
  const double point = 1.0 - a / std::numbers::e;
  f.expect(std::abs(r.nodes.nodes()[0] - point) <= 1e-6, "equioscillation point");
  f.note("point " + std::to_string(r.nodes.nodes()[0]));
  double worst = 0.0;
  for (int k = 0; k <= 200; ++k) {
    const double x = a + (0.908 - a) * k / 200.0;
    const ExtReal low = lower_value(p, NodeSystem({x}));
    worst = std::max(worst, low.is_finite() ? std::abs(low.value()) : 1e300);
  }
  f.expect(worst <= 1e-6, "lower value zero on [a, 0.908]");
  f.note("max |lower| " + fmt(worst));
}

void nonmonotone_regression(Findings& f) {
  const Problem p(std::vector<double>{1.0, 1.0}, KernelSpec::tent_log(), FieldSpec::zero());
  const double d0 = (std::sqrt(82.0) - 1.0) / 90.0;
  f.expect(std::abs(2.0 * std::log(10.0 * d0) - std::log(1.0 - 20.0 * d0 / 9.0)) <= 1e-9,
           "branch formulas at delta0");
  // Grid over (a, delta) with pitch 1e-3 on 0 <= delta <= min(a, 1 - a).
  const int steps = 1000;
  const double pitch = 1.0 / steps;
  const double tol = 1e-9;
  int zeros = 0;
  int zeros_off_sets = 0;
  int on_sets_nonzero = 0;
  for (int ia = 0; ia <= steps; ++ia) {
    for (int id = 0; 2 * id <= steps; ++id) {
      const double a = ia * pitch;
      const double d = id * pitch;
      if (d > a + 1e-12 || d > 1.0 - a + 1e-12) continue;
      const NodeSystem x({std::max(0.0, a - d), std::min(1.0, a + d)});
      const ExtReal up = upper_value(p, x);
      const bool zero = up.is_finite() && std::abs(up.value()) <= tol;
      const bool on_sets = id == 0 || id == steps / 10;
      if (zero) ++zeros;
      if (zero && !on_sets) ++zeros_off_sets;
      if (on_sets && !zero) ++on_sets_nonzero;
      if (up.is_finite() && up.value() > tol) ++zeros_off_sets;
    }
  }
  f.expect(zeros_off_sets == 0, "upper value zero (or positive) off delta in {0, 1/10}");
  f.expect(on_sets_nonzero == 0, "upper value nonzero on delta in {0, 1/10}");
  f.note(std::to_string(zeros) + " grid zeros, all on delta in {0, 1/10}");
}

void monotonicity_regression(Findings& f) {
  const GridResult mm = grid_minimax(monotonicity_problem(), GridSpec{1001, 2});
  f.expect(std::abs(mm.nodes.nodes()[0]) <= mm.final_pitch, "minimax at 0");
  f.expect(std::abs(mm.value - 11.0 / 8.0) <= 1e-6, "minimax value 11/8");
  f.note("value " + std::to_string(mm.value));
}

void singularity_regression(Findings& f) {
  const Problem p = singularity_problem();
  const GridSpec grid{101, 2};
  const GridResult mm = grid_minimax(p, grid);
  const GridResult mx = grid_maximin(p, grid);
  f.expect(mm.final_pitch <= 1e-3 && mx.final_pitch <= 1e-3, "final pitch at most 1e-3");
  for (const auto* r : {&mm, &mx}) {
    f.expect(r->nodes.distance(NodeSystem({0.0, 0.0})) <= r->final_pitch, "optimum at (0,0)");
    f.expect(std::abs(r->value - 12.0) <= 1e-9, "optimal value 12");
  }
  std::mt19937_64 rng(51);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const NodeSystem y = random_closed(rng, 2);
    const double y1 = y.nodes()[0];
    const double y2 = y.nodes()[1];
    const double expect[3] = {8.0 + std::sqrt(4.0 + y1) + std::sqrt(4.0 + y2),
                              8.0 * std::sqrt(1.0 - y1) + 2.0 + std::sqrt(4.0 + y2 - y1),
                              8.0 * std::sqrt(1.0 - y2) + std::sqrt(4.0 + y2 - y1) + 2.0};
    const auto mv = interval_maxima(p, y);
    for (std::size_t j = 0; j < 3; ++j) {
      worst = std::max(worst, std::abs(mv.m[j].value() - expect[j]));
    }
  }
  f.expect(worst <= 1e-9, "closed-form maxima at 100 random systems");
  f.note("max formula deviation " + fmt(worst));
}

void homeomorphism_round_trip(Findings& f) {
  std::mt19937_64 rng(606);
  double worst_phi = 0.0;
  double worst_spread = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 100; ++i) {
      const Problem p = random_sm_problem(rng, n);
      const auto c = random_target(rng, n);
      const SolveReport base = solve_difference(p, c);
      const auto d = difference(p, base.nodes);
      double err = 0.0;
      for (std::size_t j = 0; j < c.size(); ++j) err = std::max(err, std::abs(d.phi[j] - c[j]));
      worst_phi = std::max(worst_phi, err);
      f.expect(err <= 1e-6, "Phi(solution) = target");
      for (int s = 0; s < 10; ++s) {
        SolverOptions opts;
        opts.initial = random_strict(rng, n, 1e-2);
        const SolveReport other = solve_difference(p, c, opts);
        const double spread = other.nodes.distance(base.nodes);
        worst_spread = std::max(worst_spread, spread);
        f.expect(spread <= 1e-7, "initializations agree");
      }
    }
  }
  f.note("max residual " + fmt(worst_phi) + ", max spread " + fmt(worst_spread));
}

void sandwich_suite(Findings& f) {
  std::mt19937_64 rng(707);
  int violations = 0;
  for (int i = 0; i < 10; ++i) {
    const int n = 1 + i % 3;
    const Problem p = random_sm_problem(rng, n);
    const double value = solve_equioscillation(p).value;
    for (int s = 0; s < 50; ++s) {
      const SandwichResult r = sandwich_check(p, random_closed(rng, n), value);
      if (!r.lower_ok || !r.upper_ok) ++violations;
    }
  }
  f.expect(violations == 0, "sandwich inequalities");
  f.note(std::to_string(violations) + " violations in 500 systems");
}

void intertwining_suite(Findings& f) {
  std::mt19937_64 rng(808);
  int witnesses = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + i % 4;
    const Problem p = random_sm_problem(rng, n);
    const NodeSystem x = random_strict(rng, n);
    const NodeSystem y = random_strict(rng, n);
    const auto v = check_intertwining(p, x, y);
    f.expect(v.kind != IntertwiningVerdict::Kind::kMajorizationViolation, "no majorization");
    const auto mx = interval_maxima(p, x);
    const auto my = interval_maxima(p, y);
    double gap = 0.0;
    for (std::size_t j = 0; j < mx.m.size(); ++j) {
      gap = std::max(gap, std::abs(mx.m[j].value() - my.m[j].value()));
    }
    if (gap > 1e-7) {
      f.expect(v.kind == IntertwiningVerdict::Kind::kWitness, "two-sided witness");
      ++witnesses;
    }
  }
  const Problem tent(std::vector<double>{1.0, 1.0}, KernelSpec::tent_log(), FieldSpec::zero());
  std::vector<std::pair<NodeSystem, NodeSystem>> pairs;
  for (int k = 0; k < 40; ++k) {
    const double d1 = 0.1 + 0.005 * k;
    const double d2 = d1 + 0.0025;
    pairs.emplace_back(NodeSystem({0.5 - d1, 0.5 + d1}), NodeSystem({0.5 - d2, 0.5 + d2}));
  }
  const auto census = majorization_census(tent, pairs);
  f.expect(!census.hypotheses_hold, "negative control flagged as outside hypotheses");
  f.expect(census.strict_majorizations > 0, "negative control finds strict majorization");
  f.note(std::to_string(witnesses) + " witnesses; control " +
         std::to_string(census.strict_majorizations) + "/40 strict");
}

void perturbation_suites(Findings& f) {
  std::mt19937_64 rng(909);
  std::array<int, 5> instances{};
  const std::array<KernelSpec, 2> kernels{KernelSpec::log(), KernelSpec::sqrt_shift()};
  int draws = 0;
  while (*std::min_element(instances.begin(), instances.end()) < 200 && draws < 100000) {
    const KernelSpec& k = kernels[static_cast<std::size_t>(draws % 2)];
    const auto rep = check_interval_perturbation(k, random_pair(rng, draws % 4 < 2), 1000);
    ++draws;
    for (std::size_t c = 0; c < instances.size(); ++c) {
      if (!rep.cases[c].applicable || instances[c] >= 200) continue;
      ++instances[c];
      f.expect(rep.cases[c].passed, "interval perturbation case " + std::to_string(c));
    }
  }
  for (std::size_t c = 0; c < instances.size(); ++c) {
    f.expect(instances[c] == 200, "200 instances of case " + std::to_string(c));
  }

  int partitions = 0;
  double margin = std::numeric_limits<double>::infinity();
  while (partitions < 200) {
    const int n = 1 + partitions % 4;
    const Problem p = random_sm_problem(rng, n);
    const NodeSystem w = random_strict(rng, n, 0.02);
    std::vector<IntervalClass> cls;
    for (int k = 0; k <= n; ++k) cls.push_back(rng() % 2 ? IntervalClass::kShrink : IntervalClass::kGrow);
    if (std::count(cls.begin(), cls.end(), IntervalClass::kShrink) == 0 ||
        std::count(cls.begin(), cls.end(), IntervalClass::kGrow) == 0) {
      continue;
    }
    const NodeSystem w2 = perturb_partition(p, w, PartitionSpec(cls), 1e-3);
    const auto m1 = interval_maxima(p, w);
    const auto m2 = interval_maxima(p, w2);
    for (int k = 0; k <= n; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      const bool shrink = cls[kk] == IntervalClass::kShrink;
      const bool inclusion = shrink ? (w2.y(k) >= w.y(k) && w2.y(k + 1) <= w.y(k + 1))
                                    : (w2.y(k) <= w.y(k) && w2.y(k + 1) >= w.y(k + 1));
      f.expect(inclusion, "interval inclusion");
      const double move = m2.m[kk].value() - m1.m[kk].value();
      const double signed_move = shrink ? -move : move;
      f.expect(signed_move > 0.0, "maxima move with the interval");
      margin = std::min(margin, signed_move);
    }
    ++partitions;
  }
  f.note(std::to_string(draws) + " pair draws; smallest maxima margin " + fmt(margin));
}

void union_bound(Findings& f) {
  const WeightSpec unit = WeightSpec::unit(0.0, 1.0);
  const IntervalUnion seed({{0.0, 0.4}, {0.6, 1.0}});
  const std::vector<double> one{1.0};
  const auto seed_cmp = compare_constants(seed, one, unit);
  f.expect(std::abs(seed_cmp.unrestricted - 0.5) <= 1e-6, "seed C = 0.5");
  f.expect(std::abs(seed_cmp.restricted - 0.6) <= 1e-6, "seed R = 0.6");

  std::mt19937_64 rng(1010);
  double worst_ratio = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int k = 2 + i % 2;
    const int n = 1 + (i / 2) % 3;
    const IntervalUnion e = random_union(rng, k);
    const std::vector<double> r(static_cast<std::size_t>(n), 1.0);
    const auto w = WeightSpec::unit(e.lo(), e.hi());
    const auto cmp = compare_constants(e, r, w);
    const double factor = std::pow(2.0, k - 1);
    f.expect(cmp.unrestricted <= cmp.restricted + 1e-9, "C <= R");
    f.expect(cmp.restricted <= factor * cmp.unrestricted + 1e-9, "R <= 2^(k-1) C");
    f.expect(cmp.snapped_norm <= factor * cmp.unrestricted + 1e-9, "snapped norm <= 2^(k-1) C");
    f.expect(cmp.lower_ok && cmp.upper_ok && cmp.snap_ok, "bounds with the sharper factor");
    worst_ratio = std::max(worst_ratio, cmp.restricted / cmp.unrestricted / factor);
  }
  f.note("seed C " + std::to_string(seed_cmp.unrestricted) + ", R " +
         std::to_string(seed_cmp.restricted) + "; max R/(2^(k-1) C) " + fmt(worst_ratio));
}

void oracle_equivalence(Findings& f) {
  std::mt19937_64 rng(1111);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const int n = 1 + i % 2;
    const Problem p = random_sm_problem(rng, n);
    const double solved = solve_equioscillation(p).value;
    const GridResult g = grid_minimax(p, GridSpec{101, 2});
    const double gap = std::abs(g.value - solved);
    worst = std::max(worst, gap / g.final_pitch);
    f.expect(gap <= 10.0 * g.final_pitch, "grid value within 10 pitches");
  }
  f.note("max gap " + fmt(worst) + " pitches");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "classical Chebyshev nodes and values", 10.0, classical_chebyshev},
      {2, "capped log strictness example", 1.0, strictness_regression},
      {3, "non-monotone kernel example", 30.0, nonmonotone_regression},
      {4, "capped log plus quadratic example", 10.0, monotonicity_regression},
      {5, "singular field example", 30.0, singularity_regression},
      {6, "difference map round trip", 60.0, homeomorphism_round_trip},
      {7, "sandwich property", 60.0, sandwich_suite},
      {8, "intertwining", 60.0, intertwining_suite},
      {9, "interval and partition perturbation", 60.0, perturbation_suites},
      {10, "union of intervals bound", 300.0, union_bound},
      {11, "oracle and solver agree", 120.0, oracle_equivalence},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Findings f;
    const auto start = Clock::now();
    try {
      c.body(f);
    } catch (const std::exception& e) {
      f.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = f.ok() && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s criterion %d: %s (%.2f s of %.0f s) %s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), secs, c.limit_seconds, f.summary().c_str(),
                in_time ? "" : " [over time limit]");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
