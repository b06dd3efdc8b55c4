#include "equiosc/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "equiosc/errors.hpp"

namespace equiosc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRelTol = 1e-12;
constexpr double kBalanceTol = 1e-12;

/// lhs - rhs with the conventions -inf - finite = -inf and
/// finite - (-inf) = +inf; both -inf compares as equal.
double signed_gap(ExtReal lhs, ExtReal rhs) {
  if (lhs.is_neg_inf() && rhs.is_neg_inf()) return 0.0;
  if (lhs.is_neg_inf()) return -kInf;
  if (rhs.is_neg_inf()) return kInf;
  return lhs.value() - rhs.value();
}

double tolerance_for(ExtReal v) {
  return kRelTol * (1.0 + (v.is_finite() ? std::abs(v.value()) : 0.0));
}

std::vector<double> sample(double lo, double hi, int count) {
  std::vector<double> t;
  if (count < 2) count = 2;
  for (int k = 0; k < count; ++k) {
    t.push_back(k == count - 1 ? hi : lo + (hi - lo) * k / (count - 1));
  }
  return t;
}

bool regular_pair_member(const Problem& p, const NodeSystem& y) {
  if (!y.strict()) return false;
  if (p.kernel().flags().singular) return in_regularity_set(p, y);
  const auto mv = interval_maxima(p, y);
  return std::all_of(mv.m.begin(), mv.m.end(), [](ExtReal v) { return v.is_finite(); });
}

}  // namespace

bool PerturbationReport::all_passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseReport& c) { return c.passed; });
}

PerturbationReport check_interval_perturbation(const KernelSpec& k, const TranslatePair& pair,
                                              int grid_points) {
  const auto& [al, a, b, be, pw, qw] = pair;
  if (!(0.0 < al && al < a && a < b && b < be && be < 1.0)) {
    throw PreconditionError("need 0 < outer_left < inner_left < inner_right < outer_right < 1");
  }
  if (!(pw > 0.0) || !(qw > 0.0)) throw PreconditionError("weights must be positive");

  auto outer = [&](double t) { return scale(pw, k(t - al)) + scale(qw, k(t - be)); };
  auto inner = [&](double t) { return scale(pw, k(t - a)) + scale(qw, k(t - b)); };

  PerturbationReport rep;
  rep.mu = pw * (a - al) / (qw * (be - b));
  const KernelFlags& f = k.flags();
  const bool balanced = std::abs(rep.mu - 1.0) <= kBalanceTol;

  // outer <= inner on a set; returns the case report.
  auto widening = [&](PerturbationCase which, bool applicable,
                      const std::vector<std::pair<double, double>>& sets, bool strict) {
    CaseReport c;
    c.which = which;
    c.applicable = applicable;
    if (!applicable) return c;
    for (const auto& [lo, hi] : sets) {
      for (double t : sample(lo, hi, grid_points)) {
        const ExtReal lhs = outer(t);
        const ExtReal rhs = inner(t);
        const double gap = signed_gap(lhs, rhs);
        ++c.samples;
        c.worst_violation = std::max(c.worst_violation, gap);
        // Both sides -inf cannot be strict; it does not occur off the nodes.
        const bool ok = strict ? (gap < 0.0) : (gap <= tolerance_for(rhs));
        c.passed = c.passed && ok;
      }
    }
    return c;
  };

  const bool case_a = f.monotone && rep.mu >= 1.0 - kBalanceTol;
  const bool case_b = f.monotone && rep.mu <= 1.0 + kBalanceTol;
  const std::pair<double, double> left{0.0, al};
  const std::pair<double, double> right{be, 1.0};
  rep.cases[0] = widening(PerturbationCase::kOutsideLeft, case_a, {left}, false);
  rep.cases[1] = widening(PerturbationCase::kOutsideRight, case_b, {right}, false);
  rep.cases[2] = widening(PerturbationCase::kBalanced, balanced, {left, right}, false);

  std::vector<std::pair<double, double>> strict_sets;
  if (case_a || balanced) strict_sets.push_back(left);
  if (case_b || balanced) strict_sets.push_back(right);
  rep.cases[3] = widening(PerturbationCase::kStrict, f.strictly_concave && !strict_sets.empty(),
                          strict_sets, true);

  CaseReport inside;
  inside.which = PerturbationCase::kInside;
  inside.applicable = f.monotone;
  if (inside.applicable) {
    for (double t : sample(a, b, grid_points)) {
      const double gap = signed_gap(inner(t), outer(t));
      ++inside.samples;
      inside.worst_violation = std::max(inside.worst_violation, gap);
      const bool ok = f.strictly_monotone ? gap < 0.0 : gap <= tolerance_for(outer(t));
      inside.passed = inside.passed && ok;
    }
  }
  rep.cases[4] = inside;
  return rep;
}

PartitionSpec::PartitionSpec(std::vector<IntervalClass> classes) : class_of(std::move(classes)) {
  const bool has_shrink =
      std::find(class_of.begin(), class_of.end(), IntervalClass::kShrink) != class_of.end();
  const bool has_grow =
      std::find(class_of.begin(), class_of.end(), IntervalClass::kGrow) != class_of.end();
  if (!has_shrink || !has_grow) throw ValidationError("partition must use both classes");
}

NodeSystem perturb_partition(const Problem& p, const NodeSystem& w,
                             const PartitionSpec& partition, double h) {
  if (partition.intervals() != w.size() + 1 || w.size() != p.n()) {
    throw PreconditionError("partition must label n+1 intervals");
  }
  if (!w.strict()) throw PreconditionError("perturbation needs a strictly ordered system");
  if (!(h > 0.0)) throw PreconditionError("step h must be positive");
  std::vector<double> out = w.nodes();
  for (int l = 1; l <= w.size(); ++l) {
    const auto left = partition.class_of[static_cast<std::size_t>(l - 1)];
    const auto right = partition.class_of[static_cast<std::size_t>(l)];
    if (left == right) continue;
    const double shift = h / p.r()[static_cast<std::size_t>(l - 1)];
    out[static_cast<std::size_t>(l - 1)] += (left == IntervalClass::kGrow) ? shift : -shift;
  }
  const bool ordered = std::adjacent_find(out.begin(), out.end(), std::greater_equal<>()) ==
                       out.end();
  if (!ordered || out.front() <= 0.0 || out.back() >= 1.0) {
    throw PreconditionError("step h too large: node ordering would break");
  }
  return NodeSystem(std::move(out));
}

IntertwiningVerdict check_intertwining(const Problem& p, const NodeSystem& x,
                                       const NodeSystem& y) {
  if (!regular_pair_member(p, x) || !regular_pair_member(p, y)) {
    throw RegularityError("intertwining needs regular node systems");
  }
  IntertwiningVerdict v;
  if (x.distance(y) <= 1e-12) return v;
  const auto mx = interval_maxima(p, x);
  const auto my = interval_maxima(p, y);
  double lowest = 0.0;
  double highest = 0.0;
  for (int k = 0; k <= p.n(); ++k) {
    const auto kk = static_cast<std::size_t>(k);
    const double d = mx.m[kk].value() - my.m[kk].value();
    if (d < -kStrictnessTol && d < lowest) {
      lowest = d;
      v.i = k;
    }
    if (d > kStrictnessTol && d > highest) {
      highest = d;
      v.j = k;
    }
  }
  if (v.i >= 0 && v.j >= 0) {
    v.kind = IntertwiningVerdict::Kind::kWitness;
    return v;
  }
  v.kind = IntertwiningVerdict::Kind::kMajorizationViolation;
  v.direction = v.i >= 0   ? MajorizationDirection::kXBelowY
                : v.j >= 0 ? MajorizationDirection::kXAboveY
                           : MajorizationDirection::kTied;
  return v;
}

MajorizationReport majorization_census(
    const Problem& p, std::span<const std::pair<NodeSystem, NodeSystem>> pairs) {
  MajorizationReport rep;
  const KernelFlags& f = p.kernel().flags();
  rep.hypotheses_hold = f.singular && f.monotone;
  for (const auto& [x, y] : pairs) {
    const auto mx = interval_maxima(p, x);
    const auto my = interval_maxima(p, y);
    bool all_above = true;
    bool all_below = true;
    bool weak_above = true;
    bool weak_below = true;
    for (std::size_t k = 0; k < mx.m.size(); ++k) {
      const double d = signed_gap(mx.m[k], my.m[k]);
      all_above = all_above && d > kStrictnessTol;
      all_below = all_below && d < -kStrictnessTol;
      weak_above = weak_above && d >= -kStrictnessTol;
      weak_below = weak_below && d <= kStrictnessTol;
    }
    ++rep.pairs_checked;
    if (all_above || all_below) {
      ++rep.strict_majorizations;
    } else if (weak_above || weak_below) {
      ++rep.weak_majorizations;
    }
  }
  return rep;
}

MajorizationReport check_strict_majorization_excluded(const Problem& p, int samples,
                                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw = [&] {
    for (;;) {
      std::vector<double> v(static_cast<std::size_t>(p.n()));
      for (double& x : v) x = unit(rng);
      std::sort(v.begin(), v.end());
      if (std::adjacent_find(v.begin(), v.end()) != v.end()) continue;
      if (v.front() <= 0.0 || v.back() >= 1.0) continue;
      NodeSystem y(std::move(v));
      if (regular_pair_member(p, y)) return y;
    }
  };
  std::vector<std::pair<NodeSystem, NodeSystem>> pairs;
  for (int s = 0; s < samples; ++s) {
    NodeSystem x = draw();
    NodeSystem y = draw();
    pairs.emplace_back(std::move(x), std::move(y));
  }
  return majorization_census(p, pairs);
}

}  // namespace equiosc
