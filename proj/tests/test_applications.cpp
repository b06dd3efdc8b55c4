#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "equiosc/applications.hpp"
#include "equiosc/errors.hpp"
#include "support.hpp"

using namespace equiosc;
using namespace equiosc::testing;
using doctest::Approx;

namespace {

const IntervalUnion kTwoPieces({{0.0, 0.4}, {0.6, 1.0}});

std::vector<double> ones(int n) { return std::vector<double>(static_cast<std::size_t>(n), 1.0); }

}  // namespace

TEST_CASE("weighted polynomial values") {
  const auto w = WeightSpec::unit(0.0, 1.0);
  const std::vector<double> one{1.0};
  const std::vector<double> two{2.0};
  const std::vector<double> half{0.5};
  CHECK(gap_eval(half, one, w, 0.75) == Approx(0.25));
  CHECK(gap_eval(half, two, w, 0.0) == Approx(0.25));
  const std::vector<double> cheb{0.146447, 0.853553};
  CHECK(std::abs(gap_eval(cheb, ones(2), w, 0.0) - 0.125) <= 1e-6);
  CHECK_THROWS_AS(gap_eval(half, one, w, 1.5), DomainError);
}

TEST_CASE("weights map to log fields") {
  const WeightSpec jac(-1.0, 1.0, {WeightPiece{-1.0, 1.0, WeightJacobi{1.0, -1.0, 0.5, 1.0, 1.5}}});
  for (double t : {-0.9, -0.3, 0.0, 0.4, 0.99}) {
    CHECK(jac(t) == Approx(std::pow(t + 1.0, 0.5) * std::pow(1.0 - t, 1.5)));
  }
  const WeightSpec gap(0.0, 2.0,
                       {WeightPiece{0.0, 1.0, WeightConstant{2.0}},
                        WeightPiece{1.0, 2.0, WeightConstant{0.0}}},
                       {{1.5, 3.0}});
  CHECK(gap(0.5) == Approx(2.0));
  CHECK(gap(1.0) == Approx(2.0));
  CHECK(gap(1.2) == 0.0);
  CHECK(gap(1.5) == Approx(3.0));
  CHECK_THROWS_AS(WeightSpec(0.0, 1.0, {WeightPiece{0.0, 1.0, WeightConstant{-1.0}}}),
                  ValidationError);
}

TEST_CASE("unweighted extremal polynomials") {
  const auto a = solve_bojanov(GapProblem{ones(2), WeightSpec::unit(0.0, 1.0)});
  CHECK(a.nodes[0] == Approx(0.1464466).epsilon(1e-7));
  CHECK(a.nodes[1] == Approx(0.8535534).epsilon(1e-7));
  CHECK(a.norm == Approx(0.125).epsilon(1e-9));
  CHECK(a.interlaces);

  const auto b = solve_bojanov(GapProblem{{2.0}, WeightSpec::unit(0.0, 1.0)});
  CHECK(b.nodes[0] == Approx(0.5).epsilon(1e-9));
  CHECK(b.norm == Approx(0.25).epsilon(1e-9));

  const auto c = solve_bojanov(GapProblem{ones(3), WeightSpec::unit(-1.0, 1.0)});
  CHECK(c.nodes[0] == Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-8));
  CHECK(std::abs(c.nodes[1]) <= 1e-8);
  CHECK(c.nodes[2] == Approx(std::sqrt(3.0) / 2.0).epsilon(1e-8));
  CHECK(c.norm == Approx(0.25).epsilon(1e-9));
}

TEST_CASE("signed equioscillation") {
  const auto w01 = WeightSpec::unit(0.0, 1.0);
  const auto a = solve_bojanov(GapProblem{ones(2), w01});
  CHECK(verify_signed_equioscillation(a.nodes, ones(2), a.extremal_points, w01));
  const auto b = solve_bojanov(GapProblem{{2.0}, w01});
  CHECK(verify_signed_equioscillation(b.nodes, std::vector<double>{2.0}, b.extremal_points, w01));
  const auto wm = WeightSpec::unit(-1.0, 1.0);
  const std::vector<double> nu{1.0, 2.0};
  const auto c = solve_bojanov(GapProblem{nu, wm});
  CHECK(verify_signed_equioscillation(c.nodes, nu, c.extremal_points, wm));
  // A wrong sign pattern is rejected.
  CHECK_FALSE(verify_signed_equioscillation(c.nodes, std::vector<double>{1.0, 1.0},
                                            c.extremal_points, wm));
  CHECK_THROWS_AS(verify_signed_equioscillation(c.nodes, std::vector<double>{1.0, 1.5},
                                                c.extremal_points, wm),
                  PreconditionError);
}

TEST_CASE("weighted extremal polynomials equioscillate") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 10; ++i) {
    const int n = 1 + i % 4;
    const double a = uniform(rng, -2.0, 0.0);
    const double b = a + uniform(rng, 0.5, 3.0);
    const WeightSpec w(a, b,
                       {WeightPiece{a, b, WeightJacobi{uniform(rng, 0.5, 2.0), a,
                                                       uniform(rng, 0.0, 2.0), b,
                                                       uniform(rng, 0.0, 2.0)}}});
    const GapProblem gp{random_exponents(rng, n), w};
    const auto sol = solve_bojanov(gp);
    CHECK(sol.interlaces);
    CHECK(a < sol.nodes.front());
    CHECK(sol.nodes.back() < b);
    for (double t : sol.extremal_points) {
      CHECK(std::abs(gap_eval(sol.nodes, gp.r, w, t) - sol.norm) <= 1e-8 * sol.norm);
    }
    // Interval maxima of any other system bracket the norm.
    const auto p = gp.to_problem();
    const NodeSystem x = random_strict(rng, n);
    const auto mv = interval_maxima(p, x);
    const double shift = std::accumulate(gp.r.begin(), gp.r.end(), 0.0) * std::log(b - a);
    CHECK(std::exp(mv.lower().value() + shift) < sol.norm);
    CHECK(sol.norm < std::exp(mv.upper().value() + shift));
  }
}

TEST_CASE("interval unions") {
  CHECK_THROWS_AS(IntervalUnion({{0.0, 0.5}, {0.5, 1.0}}), ValidationError);
  CHECK_THROWS_AS(IntervalUnion({{0.6, 1.0}, {0.0, 0.4}}), ValidationError);
  CHECK(kTwoPieces.contains(0.4));
  CHECK_FALSE(kTwoPieces.contains(0.5));
}

TEST_CASE("snapping") {
  CHECK(snap_to_E(std::vector<double>{0.5}, kTwoPieces) == std::vector<double>{0.4});
  CHECK(snap_to_E(std::vector<double>{0.45, 0.7}, kTwoPieces) == std::vector<double>{0.4, 0.7});
  CHECK(snap_to_E(std::vector<double>{0.3}, kTwoPieces) == std::vector<double>{0.3});
  CHECK(snap_to_E(std::vector<double>{0.58}, kTwoPieces) == std::vector<double>{0.6});
}

TEST_CASE("seed instance constants") {
  const auto w = WeightSpec::unit(0.0, 1.0);
  const auto c = unrestricted_constant(kTwoPieces, ones(1), w);
  CHECK(c.value == Approx(0.5).epsilon(1e-9));
  CHECK(c.nodes[0] == Approx(0.5).epsilon(1e-9));
  const auto r = restricted_constant(kTwoPieces, ones(1), w);
  CHECK(r.value == Approx(0.6).epsilon(1e-9));
  CHECK(r.nodes[0] == Approx(0.4));
}

TEST_CASE("single interval has no restriction gap") {
  const IntervalUnion whole({{0.0, 1.0}});
  const auto w = WeightSpec::unit(0.0, 1.0);
  const auto cmp = compare_constants(whole, ones(2), w);
  CHECK(cmp.unrestricted == Approx(0.125).epsilon(1e-9));
  CHECK(cmp.restricted == Approx(cmp.unrestricted).epsilon(1e-9));
  CHECK(cmp.bound_factor == 1.0);
}

TEST_CASE("two intervals and two nodes") {
  const auto w = WeightSpec::unit(0.0, 1.0);
  const auto cmp = compare_constants(kTwoPieces, ones(2), w);
  CHECK(cmp.lower_ok);
  CHECK(cmp.upper_ok);
  CHECK(cmp.snap_ok);
  CHECK(cmp.restricted <= 2.0 * cmp.unrestricted);
  const Problem p = union_problem(kTwoPieces, ones(2), w);
  const auto g = grid_minimax(p, GridSpec{201, 2});
  CHECK(std::abs(std::exp(g.value) - cmp.unrestricted) <= 10.0 * g.final_pitch);
}

TEST_CASE("bound factor") {
  CHECK(union_bound_factor(2, ones(3)) == 2.0);
  CHECK(union_bound_factor(3, ones(2)) == 4.0);
  CHECK(union_bound_factor(2, std::vector<double>{2.0, 1.0}) == 4.0);
  CHECK(union_bound_factor(4, ones(2)) == 4.0);
}
