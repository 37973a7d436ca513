#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "ergodic/potentials.hpp"
#include "support.hpp"

using namespace ergodic;
using test_support::uniform;

namespace {

// Exhaustive minimum over the 2^n level-n points 1/2 + sum a_i 3^-i.
double brute_trunc(double x, int n) {
  double best = std::numeric_limits<double>::infinity();
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    double p = 0.5, step = 1.0;
    for (int i = 0; i < n; ++i) {
      step /= 3.0;
      p += (bits >> i) & 1u ? step : -step;
    }
    best = std::min(best, std::abs(x - p));
  }
  return -best;
}

}  // namespace

TEST_CASE("catalog golden values") {
  const auto s = catalog("sin_sq");
  CHECK(s(1.0 / 3.0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(*s.known_m == 0.75);

  const auto q = catalog("quadratic_third");
  CHECK((q(1.0 / 7.0) + q(2.0 / 7.0) + q(4.0 / 7.0)) / 3.0 == doctest::Approx(-2.0 / 63.0).epsilon(1e-15));
  CHECK(*q.known_m == doctest::Approx(-2.0 / 63.0).epsilon(1e-15));

  const auto o = catalog("octic");
  for (double r : {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0}) CHECK(std::abs(o(r)) <= 1e-30);

  // the sin orbit average is sqrt(15)/8
  CHECK(*catalog("sin").known_m == doctest::Approx(std::sqrt(15.0) / 8.0).epsilon(1e-15));
  CHECK(*catalog("log_farey").known_m == doctest::Approx(0.9624236501192067).epsilon(1e-15));

  const auto n = catalog("neg_log_farey");
  CHECK(*n.known_m == 0.0);
  CHECK(n.known_mather == std::vector<double>{0.0, 1.0});
}

TEST_CASE("catalog errors") {
  CHECK_THROWS_AS(catalog("no_such_potential"), CatalogError);
  const std::vector<double> extra{1.0};
  CHECK_THROWS_AS(catalog("sin_sq", extra), ParameterError);
  CHECK_THROWS_AS(catalog("self_subaction", extra), ParameterError);
  const std::vector<double> frac{2.5};
  CHECK_THROWS_AS(catalog("cantor_dist_trunc", frac), ParameterError);
}

TEST_CASE("every name in the catalog builds with default parameters") {
  for (const auto& name : catalog_names()) {
    std::vector<double> p;
    if (name == "cantor_dist_trunc") p = {10};
    if (name == "matrix_pot") p = {2, 1, 2, 2, 2, 2, 1, 2};
    if (name == "self_subaction") p = {0.4, 1.0};
    const auto pot = catalog(name, p);
    CHECK(pot.name == name);
  }
}

TEST_CASE("symmetric potentials pass a spot check at 1000 points") {
  std::vector<Potential> pots;
  for (const auto& name : catalog_names()) {
    std::vector<double> p;
    if (name == "cantor_dist_trunc") p = {10};
    if (name == "matrix_pot") continue;
    if (name == "self_subaction") p = {0.4, 1.0};
    pots.push_back(catalog(name, p));
  }
  for (const auto& pot : pots) {
    if (!pot.symmetric) continue;
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double x = uniform(1e-6, 1.0 - 1e-6);
      worst = std::max(worst, std::abs(pot(x) - pot(1.0 - x)));
    }
    CHECK_MESSAGE(worst <= 1e-12, pot.name);
  }
}

TEST_CASE("distance to the Cantor set") {
  CHECK(cantor_distance(1.0 / 3.0) == 0.0);
  CHECK(cantor_distance(0.0) == 0.0);
  CHECK(cantor_distance(1.0) == 0.0);
  CHECK(cantor_distance(0.5) == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
  CHECK(brute_trunc(0.5, 16) == doctest::Approx(-1.0 / 6.0).epsilon(1e-6));
  CHECK_THROWS_AS(cantor_distance(1.5), DomainError);
}

TEST_CASE("exact distance agrees with exhaustive level-16 enumeration") {
  for (int k = 0; k < 20; ++k) {
    const double x = uniform();
    CHECK(std::abs(cantor_distance(x) - brute_trunc(x, 16)) <= 0.5 * std::pow(3.0, -16) + 1e-15);
  }
}

TEST_CASE("truncated Cantor distance examples") {
  // level-one points are 1/6 and 5/6, both 1/3 away from 1/2
  CHECK(cantor_distance_trunc(0.5, 1) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(cantor_distance_trunc(0.5, 30) == doctest::Approx(-1.0 / 6.0).epsilon(1e-12));
  CHECK(cantor_distance_trunc(0.0, 2) == doctest::Approx(-1.0 / 18.0).epsilon(1e-15));
  CHECK_THROWS_AS(cantor_distance_trunc(0.5, 0), ParameterError);
  CHECK_THROWS_AS(cantor_distance_trunc(0.5, 41), ParameterError);
}

TEST_CASE("greedy digit choice equals exhaustive enumeration at level 10") {
  for (int k = 0; k < 200; ++k) {
    const double x = uniform();
    CHECK(cantor_distance_trunc(x, 10) == doctest::Approx(brute_trunc(x, 10)).epsilon(1e-14));
  }
}

TEST_CASE("truncations approach the exact distance within half a level-n interval") {
  for (int n : {5, 10, 20, 30}) {
    for (int k = 0; k < 100; ++k) {
      const double x = uniform();
      CHECK(cantor_distance_trunc(x, n) <= 0.0);
      CHECK(std::abs(cantor_distance_trunc(x, n) - cantor_distance(x)) <= 0.5 * std::pow(3.0, -n) + 1e-15);
    }
  }
}

TEST_CASE("matrix potential on the two examples") {
  const auto first = matrix_potential(test_support::example_a1(), test_support::example_a2());
  CHECK(first(0.4) == doctest::Approx(0.5 * (std::log(2.0 / 0.36) + std::log(2.0))).epsilon(1e-14));
  CHECK(first(0.6) == doctest::Approx(0.5 * (std::log(2.0 / 0.36) + std::log(2.0))).epsilon(1e-14));
  const auto second = matrix_potential(test_support::example_a1(), test_support::second_example_a2());
  CHECK(second(0.6) == doctest::Approx(0.5 * (std::log(2.0 / 0.36) - std::log(2.0))).epsilon(1e-14));
  CHECK(first.domain.lo == doctest::Approx(1.0 / 3.0));
  CHECK(first.domain.hi == doctest::Approx(2.0 / 3.0));
  CHECK(first.mode == DomainMode::interval);
}

TEST_CASE("matrix potential matches the displayed piecewise formula") {
  const auto pot = matrix_potential(test_support::example_a1(), test_support::example_a2());
  for (int k = 0; k < 100; ++k) {
    const double a = uniform(1.0 / 3.0, 0.5), b = uniform(0.5, 2.0 / 3.0);
    CHECK(std::abs(pot(a) - 0.5 * (std::log(2.0 / ((a - 1.0) * (a - 1.0))) + std::log(2.0))) <= 1e-12);
    CHECK(std::abs(pot(b) - 0.5 * (std::log(2.0 / (b * b)) + std::log(2.0))) <= 1e-12);
  }
}

TEST_CASE("matrix potential with t adds log t^2 on the second piece") {
  const double t = 0.7;
  const auto base = matrix_potential(test_support::example_a1(), test_support::example_a2());
  const auto scaled = matrix_potential(test_support::example_a1(), test_support::example_a2(), t);
  CHECK(scaled(0.6) - base(0.6) == doctest::Approx(std::log(t)).epsilon(1e-13));
  CHECK(scaled(0.4) == base(0.4));
}

TEST_CASE("matrix potential errors") {
  const auto pot = matrix_potential(test_support::example_a1(), test_support::example_a2());
  CHECK_THROWS_AS(pot(0.2), DomainError);
  CHECK_THROWS_AS(matrix_potential(test_support::example_a1(), make_matrix2(1, 2, 2, 1)), ConstructionError);
  CHECK_THROWS_AS(matrix_potential(test_support::example_a1(), test_support::example_a2(), 0.0), ParameterError);
}

TEST_CASE("self-subaction potential") {
  const auto u = self_subaction_potential(0.4, 1.0);
  CHECK(u(1.0 / 3.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(u(0.5) == doctest::Approx(1.0 - 0.4 / 6.0).epsilon(1e-15));
  CHECK(u(0.2) == doctest::Approx(u(0.8)).epsilon(1e-15));
  CHECK(*u.known_m == 1.0);
  CHECK_THROWS_AS(self_subaction_potential(0.0, 1.0), ParameterError);
}
