#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ergodic/analytic.hpp"
#include "ergodic/jsr.hpp"
#include "ergodic/orbits.hpp"
#include "support.hpp"

using namespace ergodic;

namespace {

SolverConfig config(double tol, Eigen::Index n = 10000) {
  SolverConfig c;
  c.n = n;
  c.tol = tol;
  return c;
}

const double kTol = 2.5e-8;

}  // namespace

TEST_CASE("spectral radius of 2x2 matrices") {
  CHECK(spectral_radius(test_support::example_a1()) == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-15));
  CHECK(spectral_radius(test_support::second_example_a2()) == doctest::Approx(1.0 + std::sqrt(0.5)).epsilon(1e-15));
  CHECK(spectral_radius(make_matrix2(0, -1, 1, 0)) == doctest::Approx(1.0));
}

TEST_CASE("joint spectral radius of the worked examples") {
  const auto a1 = test_support::example_a1();
  const auto first = joint_spectral_radius(a1, test_support::example_a2(), config(kTol));
  CHECK(first.rho == doctest::Approx(std::exp(first.m)).epsilon(1e-15));
  CHECK(std::abs(first.rho - jsr_example1_b()) <= 1e-2);
  CHECK(std::abs(first.m - std::log(jsr_example1_b())) <= 1e-7);
  CHECK(first.subaction.converged);
  CHECK(first.rho >= first.max_single_radius);

  const auto second = joint_spectral_radius(a1, test_support::second_example_a2(), config(kTol));
  CHECK(std::abs(second.rho - (2.0 + std::sqrt(2.0))) <= 1e-2);
  CHECK(std::abs(second.m - std::log(2.0 + std::sqrt(2.0))) <= 1e-7);
}

TEST_CASE("identical matrices give the spectral radius of one of them") {
  const auto a1 = test_support::example_a1();
  const auto r = joint_spectral_radius(a1, a1, config(kTol));
  CHECK(r.rho == doctest::Approx(spectral_radius(a1)).epsilon(1e-7));
}

TEST_CASE("scan over t against the closed forms") {
  const auto a1 = test_support::example_a1(), a2 = test_support::example_a2();
  const auto scan = t_scan(a1, a2, {0.5, 0.91, 1.0}, config(kTol));
  REQUIRE(scan.size() == 3);
  for (const auto& p : scan) REQUIRE(p.result);
  CHECK(std::abs(scan[0].result->m - std::log(2.0 + std::sqrt(2.0))) <= 1e-3);
  CHECK(std::abs(scan[1].result->m - 0.25 * std::log((75.0 + std::sqrt(5609.0)) * 0.91)) <= 1e-3);
  CHECK(std::abs(scan[2].result->m - std::log(jsr_example1_b())) <= 1e-3);
  CHECK(*scan[1].result->t == 0.91);
}

TEST_CASE("m is non-decreasing in t and flat on the first window") {
  const auto a1 = test_support::example_a1(), a2 = test_support::example_a2();
  const auto ts = parse_range("0.1:1.2:0.05");
  const auto scan = t_scan(a1, a2, ts, config(kTol, 4000));
  for (std::size_t i = 1; i < scan.size(); ++i) CHECK(scan[i].result->m >= scan[i - 1].result->m - 1e-6);

  std::vector<double> plateau;
  for (const auto& p : t_scan(a1, a2, parse_range("0.1:0.9:0.1"), config(kTol))) plateau.push_back(p.result->m);
  REQUIRE(plateau.size() == 9);
  const auto [lo, hi] = std::minmax_element(plateau.begin(), plateau.end());
  CHECK(*hi - *lo <= 5.0 * kTol);
}

TEST_CASE("numeric m agrees with every accepted closed form") {
  const auto a1 = test_support::example_a1(), a2 = test_support::example_a2();
  for (double t : {0.2, 0.6, jsr_t1(), jsr_t2(), 0.91, jsr_t3()}) {
    const auto r = joint_spectral_radius(a1, a2, config(kTol), t);
    CAPTURE(t);
    CHECK(std::abs(r.m - jsr_exact_parametric(0.5, t).m) <= 1e-3);
  }
}

TEST_CASE("oracle agrees with the solver on the matrix family") {
  const auto a1 = test_support::example_a1(), a2 = test_support::example_a2();
  const auto sys = mobius_system(a1, a2);
  for (double t : {0.5, 0.91, 1.0}) {
    const auto r = joint_spectral_radius(a1, a2, config(kTol), t);
    const auto o = best_periodic_value(matrix_potential(a1, a2, t), sys, 8);
    CAPTURE(t);
    CHECK(std::abs(o.birkhoff_average - r.m) <= 4.0 * kTol);
    CHECK(o.period <= 4);
  }
}

TEST_CASE("scan records per-point errors and continues") {
  const auto a1 = test_support::example_a1(), a2 = test_support::example_a2();
  const auto scan = t_scan(a1, a2, {0.0, 0.5}, config(1e-6, 500));
  REQUIRE(scan.size() == 2);
  CHECK_FALSE(scan[0].result);
  CHECK_FALSE(scan[0].error.empty());
  CHECK(scan[1].result);
}

TEST_CASE("range parsing") {
  const auto r = parse_range("0:1:0.25");
  REQUIRE(r.size() == 5);
  CHECK(r.back() == doctest::Approx(1.0));
  CHECK(parse_range("0.5:0.5:0.1") == std::vector<double>{0.5});
  CHECK_THROWS_AS(parse_range("0:1"), ParameterError);
  CHECK_THROWS_AS(parse_range("1:0:0.1"), ParameterError);
  CHECK_THROWS_AS(parse_range("0:1:0"), ParameterError);
}

TEST_CASE("invalid inputs are rejected") {
  const auto a1 = test_support::example_a1();
  CHECK_THROWS_AS(joint_spectral_radius(a1, make_matrix2(1, 2, 2, 4), config(1e-6, 100)), ConstructionError);
  CHECK_THROWS_AS(joint_spectral_radius(a1, test_support::example_a2(), config(1e-6, 100), -1.0), ParameterError);
}
