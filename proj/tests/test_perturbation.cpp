#include <cmath>
#include <random>

#include "doctest.h"
#include "equiosc/errors.hpp"
#include "equiosc/equi_solver.hpp"
#include "equiosc/perturbation.hpp"
#include "support.hpp"

using namespace equiosc;
using namespace equiosc::testing;
using doctest::Approx;
using Kind = IntertwiningVerdict::Kind;
constexpr auto S = IntervalClass::kShrink;
constexpr auto G = IntervalClass::kGrow;

namespace {

/// Random nested pair; when balanced, the outer right node is placed so
/// that mu = 1 exactly up to rounding.
TranslatePair random_pair(std::mt19937_64& rng, bool balanced) {
  for (;;) {
    TranslatePair tp;
    tp.left_weight = uniform(rng, 0.5, 2.0);
    tp.right_weight = uniform(rng, 0.5, 2.0);
    tp.outer_left = uniform(rng, 0.02, 0.5);
    tp.inner_left = tp.outer_left + uniform(rng, 0.01, 0.2);
    tp.inner_right = tp.inner_left + uniform(rng, 0.01, 0.3);
    tp.outer_right =
        balanced ? tp.inner_right + tp.left_weight * (tp.inner_left - tp.outer_left) /
                                        tp.right_weight
                 : tp.inner_right + uniform(rng, 0.01, 0.3);
    if (tp.outer_right < 0.98) return tp;
  }
}

}  // namespace

TEST_CASE("interval perturbation examples") {
  const TranslatePair tp{0.2, 0.3, 0.6, 0.7, 1.0, 1.0};
  const auto rep = check_interval_perturbation(KernelSpec::log(), tp, 1000);
  CHECK(rep.mu == Approx(1.0));
  CHECK(rep.all_passed());
  CHECK(rep.at(PerturbationCase::kBalanced).applicable);
  CHECK(rep.at(PerturbationCase::kStrict).applicable);
  // At t = 0.1: log(0.1 * 0.6) < log(0.2 * 0.5).
  CHECK(std::log(0.1 * 0.6) < std::log(0.2 * 0.5));

  const TranslatePair tq{0.2, 0.3, 0.6, 0.7, 2.0, 1.0};
  const auto sq = check_interval_perturbation(KernelSpec::sqrt_shift(), tq, 1000);
  CHECK(sq.mu == Approx(2.0));
  CHECK(sq.at(PerturbationCase::kInside).applicable);
  CHECK(sq.at(PerturbationCase::kInside).passed);
  CHECK(sq.at(PerturbationCase::kInside).worst_violation < 0.0);
  CHECK(sq.at(PerturbationCase::kOutsideLeft).applicable);
  CHECK_FALSE(sq.at(PerturbationCase::kOutsideRight).applicable);
  CHECK(sq.all_passed());

  CHECK_THROWS_AS(check_interval_perturbation(KernelSpec::log(), {0.3, 0.3, 0.6, 0.6, 1, 1}, 10),
                  PreconditionError);
}

TEST_CASE("balanced case holds without monotonicity") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto rep = check_interval_perturbation(KernelSpec::tent_log(), random_pair(rng, true), 500);
    CHECK(rep.at(PerturbationCase::kBalanced).applicable);
    CHECK(rep.at(PerturbationCase::kBalanced).passed);
    CHECK(rep.at(PerturbationCase::kStrict).passed);
    CHECK_FALSE(rep.at(PerturbationCase::kInside).applicable);
  }
}

TEST_CASE("random interval perturbation instances") {
  std::mt19937_64 rng(12);
  for (const auto& k : {KernelSpec::log(), KernelSpec::sqrt_shift(), KernelSpec::capped_log(0.2)}) {
    for (int i = 0; i < 60; ++i) {
      const auto rep = check_interval_perturbation(k, random_pair(rng, i % 3 == 0), 300);
      CAPTURE(k.name());
      CHECK(rep.all_passed());
    }
  }
}

TEST_CASE("partition perturbation examples") {
  const Problem p1 = log_problem(1);
  CHECK(perturb_partition(p1, NodeSystem({0.5}), PartitionSpec({G, S}), 0.01).nodes()[0] ==
        Approx(0.51));
  const Problem p2 = log_problem(2);
  const auto alt = perturb_partition(p2, NodeSystem({0.3, 0.6}), PartitionSpec({G, S, G}), 0.01);
  CHECK(alt.nodes()[0] == Approx(0.31));
  CHECK(alt.nodes()[1] == Approx(0.59));
  const auto iij = perturb_partition(p2, NodeSystem({0.3, 0.6}), PartitionSpec({S, S, G}), 0.01);
  CHECK(iij.nodes()[0] == 0.3);
  CHECK(iij.nodes()[1] == Approx(0.59));
  const Problem weighted({2.0, 0.5}, KernelSpec::log(), FieldSpec::zero());
  const auto wr = perturb_partition(weighted, NodeSystem({0.3, 0.6}), PartitionSpec({G, S, G}), 0.01);
  CHECK(wr.nodes()[0] == Approx(0.305));
  CHECK(wr.nodes()[1] == Approx(0.58));
  CHECK_THROWS_AS(PartitionSpec({S, S}), ValidationError);
  CHECK_THROWS_AS(perturb_partition(p2, NodeSystem({0.3, 0.6}), PartitionSpec({G, S, G}), 0.2),
                  PreconditionError);
  CHECK_THROWS_AS(perturb_partition(p2, NodeSystem({0.0, 0.6}), PartitionSpec({G, S, G}), 0.01),
                  PreconditionError);
}

TEST_CASE("partition perturbation moves maxima the right way") {
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 100) {
    const int n = 1 + checked % 4;
    const Problem p(random_exponents(rng, n), KernelSpec::log(), random_concave_field(rng));
    const NodeSystem w = random_strict(rng, n, 0.02);
    std::vector<IntervalClass> cls;
    for (int k = 0; k <= n; ++k) cls.push_back(rng() % 2 ? S : G);
    if (std::count(cls.begin(), cls.end(), S) == 0 || std::count(cls.begin(), cls.end(), G) == 0) {
      continue;
    }
    const PartitionSpec part(cls);
    const double h = 1e-3;
    const NodeSystem w2 = perturb_partition(p, w, part, h);
    const auto m1 = interval_maxima(p, w);
    const auto m2 = interval_maxima(p, w2);
    for (int k = 0; k <= n; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      const double lo1 = w.y(k), hi1 = w.y(k + 1), lo2 = w2.y(k), hi2 = w2.y(k + 1);
      if (cls[kk] == S) {
        CHECK(lo2 >= lo1);
        CHECK(hi2 <= hi1);
        CHECK(m2.m[kk].value() < m1.m[kk].value());
      } else {
        CHECK(lo2 <= lo1);
        CHECK(hi2 >= hi1);
        CHECK(m2.m[kk].value() > m1.m[kk].value());
      }
    }
    ++checked;
  }
}

TEST_CASE("intertwining examples") {
  const Problem p1 = log_problem(1);
  CHECK(check_intertwining(p1, NodeSystem({0.4}), NodeSystem({0.4})).kind == Kind::kEqual);
  const auto v = check_intertwining(p1, NodeSystem({0.4}), NodeSystem({0.6}));
  CHECK(v.kind == Kind::kWitness);
  CHECK(v.i == 0);
  CHECK(v.j == 1);
  const Problem p4 = log_problem(4);
  const auto q = check_intertwining(p4, NodeSystem({0.05, 0.22, 0.634, 0.915}),
                                    NodeSystem({0.035, 0.25, 0.4, 0.965}));
  CHECK(q.kind == Kind::kWitness);
  CHECK_THROWS_AS(check_intertwining(log_problem(2), NodeSystem({0.3, 0.3}), NodeSystem({0.2, 0.4})),
                  RegularityError);
}

TEST_CASE("no majorization for strictly monotone singular kernels") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 3;
    const Problem p(random_exponents(rng, n), KernelSpec::log(), random_concave_field(rng));
    const auto v = check_intertwining(p, random_strict(rng, n), random_strict(rng, n));
    CHECK(v.kind == Kind::kWitness);
  }
  const auto rep = check_strict_majorization_excluded(log_problem(2), 500, 3);
  CHECK(rep.hypotheses_hold);
  CHECK(rep.pairs_checked == 500);
  CHECK(rep.strict_majorizations == 0);
}

TEST_CASE("tent kernel exhibits strict majorization") {
  const Problem tent({1.0, 1.0}, KernelSpec::tent_log(), FieldSpec::zero());
  std::vector<std::pair<NodeSystem, NodeSystem>> pairs;
  for (int k = 0; k < 20; ++k) {
    const double d1 = 0.1 + 0.01 * k;
    const double d2 = d1 + 0.005;
    pairs.emplace_back(NodeSystem({0.5 - d1, 0.5 + d1}), NodeSystem({0.5 - d2, 0.5 + d2}));
  }
  const auto rep = majorization_census(tent, pairs);
  CHECK_FALSE(rep.hypotheses_hold);
  CHECK(rep.strict_majorizations == 20);
  const auto random = check_strict_majorization_excluded(tent, 200, 5);
  CHECK_FALSE(random.hypotheses_hold);
}

TEST_CASE("capped log census reports weak majorization") {
  const Problem p = strictness_problem();
  std::vector<std::pair<NodeSystem, NodeSystem>> pairs;
  for (int k = 0; k < 10; ++k) {
    pairs.emplace_back(NodeSystem({0.3 + 0.02 * k}), NodeSystem({0.31 + 0.02 * k}));
  }
  const auto rep = majorization_census(p, pairs);
  CHECK(rep.hypotheses_hold);
  CHECK(rep.weak_majorizations == 10);
  CHECK(rep.strict_majorizations == 0);
}

TEST_CASE("minimax and maximin systems share a value at some index") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 5; ++i) {
    const int n = 1 + i % 3;
    const Problem p(random_exponents(rng, n), KernelSpec::log(), random_concave_field(rng));
    const auto w = solve_equioscillation(p);
    const auto mw = interval_maxima(p, w.nodes);
    bool found = false;
    for (int k = 0; k <= n; ++k) {
      found = found || std::abs(mw.m[static_cast<std::size_t>(k)].value() - w.value) <= 1e-9;
    }
    CHECK(found);
  }
}
