#include <doctest.h>

#include <cmath>

#include "ergodic/systems.hpp"
#include "support.hpp"

using namespace ergodic;
using test_support::uniform;

TEST_CASE("doubling branches and forward map") {
  for (auto mode : {DomainMode::periodic, DomainMode::interval}) {
    const auto sys = doubling_system(mode);
    REQUIRE(sys.branches.size() == 2);
    CHECK(sys.branches[0].map(2.0 / 3.0) == doctest::Approx(1.0 / 3.0));
    CHECK(sys.branches[1].map(1.0 / 3.0) == doctest::Approx(2.0 / 3.0));
    CHECK(sys.forward(sys.branches[1].map(0.123)) == doctest::Approx(0.123).epsilon(1e-15));
  }
  CHECK(doubling_system(DomainMode::interval).forward(1.0) == 1.0);
  CHECK(doubling_system(DomainMode::periodic).forward(0.75) == 0.5);
}

TEST_CASE("forward undoes every branch on 1000 random points") {
  for (const auto& sys : {doubling_system(DomainMode::periodic), doubling_system(DomainMode::interval),
                          farey_like_system()}) {
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double x = uniform();
      for (const auto& br : sys.branches) worst = std::max(worst, std::abs(sys.forward(br.map(x)) - x));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("Farey-type branches") {
  const auto sys = farey_like_system();
  CHECK(sys.branches[0].map(0.0) == 0.0);
  CHECK(sys.branches[1].map(1.0) == 1.0);
  // (sqrt5 - 1)/2 has period two under the forward map
  const double x0 = (std::sqrt(5.0) - 1.0) / 2.0;
  CHECK(sys.forward(sys.forward(x0)) == doctest::Approx(x0).epsilon(1e-12));
  CHECK(sys.forward(x0) != doctest::Approx(x0));
  // indifferent at 0: derivative of tau_1 tends to 1
  CHECK(sys.branches[0].derivative(0.0) == doctest::Approx(1.0));
}

TEST_CASE("branch images overlap at most at endpoints") {
  const Matrix2 a1 = test_support::example_a1(), a2 = test_support::example_a2();
  for (const auto& sys : {doubling_system(DomainMode::interval), farey_like_system(), mobius_system(a1, a2)}) {
    const Interval& i1 = sys.branches[0].image;
    const Interval& i2 = sys.branches[1].image;
    CHECK(i1.hi <= i2.lo + 1e-15);
  }
}

TEST_CASE("branches contract away from the Farey indifferent point") {
  const Matrix2 a1 = test_support::example_a1(), a2 = test_support::example_a2();
  for (const auto& sys : {doubling_system(DomainMode::interval), farey_like_system(), mobius_system(a1, a2)}) {
    for (const auto& br : sys.branches) {
      for (int k = 0; k < 200; ++k) {
        const double x = uniform(0.05, 1.0), y = uniform(0.05, 1.0);
        CHECK(std::abs(br.map(x) - br.map(y)) < std::abs(x - y));
        CHECK(br.image.contains(br.map(x), 1e-15));
      }
    }
  }
}

TEST_CASE("Mobius system from the first matrix example") {
  const auto sys = mobius_system(test_support::example_a1(), test_support::example_a2());
  for (int k = 0; k < 50; ++k) {
    const double x = uniform();
    CHECK(sys.branches[0].map(x) == doctest::Approx((x + 1.0) / (x + 3.0)).epsilon(1e-14));
    CHECK(sys.branches[1].map(x) == doctest::Approx(2.0 / (4.0 - x)).epsilon(1e-14));
    CHECK(sys.branches[0].inverse(sys.branches[0].map(x)) == doctest::Approx(x).epsilon(1e-12));
  }
  CHECK(sys.branches[0].image.lo == doctest::Approx(1.0 / 3.0));
  CHECK(sys.branches[0].image.hi == doctest::Approx(0.5));
  CHECK(sys.branches[1].image.lo == doctest::Approx(0.5));
  CHECK(sys.branches[1].image.hi == doctest::Approx(2.0 / 3.0));
  CHECK(sys.working_interval.lo == doctest::Approx(1.0 / 3.0));
  CHECK(sys.working_interval.hi == doctest::Approx(2.0 / 3.0));
  CHECK_FALSE(sys.has_forward());
}

TEST_CASE("Mobius derivative matches a central difference") {
  const auto sys = mobius_system(test_support::example_a1(), test_support::second_example_a2());
  const double h = 1e-6;
  for (const auto& br : sys.branches) {
    for (int k = 0; k < 100; ++k) {
      const double x = uniform(0.01, 0.99);
      const double fd = (br.map(x + h) - br.map(x - h)) / (2.0 * h);
      CHECK(br.derivative(x) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("scaling a matrix leaves its branch unchanged") {
  const auto a = mobius_system(test_support::example_a1(), test_support::example_a2());
  const auto b = mobius_system(test_support::example_a1(), 0.37 * test_support::example_a2());
  for (int k = 0; k < 20; ++k) {
    const double x = uniform();
    CHECK(a.branches[1].map(x) == doctest::Approx(b.branches[1].map(x)).epsilon(1e-14));
  }
}

TEST_CASE("degenerate matrices are rejected") {
  const Matrix2 good = test_support::example_a1();
  CHECK_THROWS_AS(mobius_system(Matrix2::Identity(), good), ConstructionError);     // not a contraction
  CHECK_THROWS_AS(mobius_system(make_matrix2(1, 2, 2, 4), good), ConstructionError);  // singular
  CHECK_THROWS_AS(mobius_system(make_matrix2(1, 2, 2, 1), good), ConstructionError);  // reversed
  CHECK_THROWS_AS(mobius_system(make_matrix2(2, -1, 2, 2), good), ConstructionError);
}
