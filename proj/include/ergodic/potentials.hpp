#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ergodic/systems.hpp"

namespace ergodic {

/// A potential A together with the facts the solver and the regression suite rely on.
struct Potential {
  std::string name;
  RealMap eval;
  bool symmetric = false;  // A(x) == A(1 - x)
  DomainMode mode = DomainMode::interval;
  Interval domain{};
  std::optional<double> known_m;
  /// Points known to lie in the Mather set. For potentials with a unique maximizing
  /// orbit this is that orbit.
  std::vector<double> known_mather;

  double operator()(double x) const { return eval(x); }
  bool defined_at(double x) const { return domain.contains(x, 1e-12 * domain.width()); }
};

/// Names accepted by catalog().
const std::vector<std::string>& catalog_names();

/// Builds a named potential. Parameter counts:
///   quadratic_third, sin_sq, sin, log_farey, neg_log_farey, quartic_pair, octic, cantor_dist: none
///   cantor_dist_trunc: n
///   matrix_pot: a1 a2 a3 a4 b1 b2 b3 b4 [t]   (row-major entries of A1 then A2, t defaults to 1)
///   self_subaction: alpha beta
Potential catalog(std::string_view name, std::span<const double> params = {});

Potential constant_potential(double value, DomainMode mode = DomainMode::periodic);

/// -d(x, K) for the middle-thirds Cantor set K, by exact ternary descent.
double cantor_distance(double x);

/// -min over the 2^n points 1/2 + sum_{i<=n} a_i 3^{-i}, a_i = +-1 (greedy digit choice).
double cantor_distance_trunc(double x, int n);

/// On I_j = tau_j([0,1]): (1/2)(log|(tau_j^{-1})'(x)| + log det A_j), with A_2 scaled by t.
Potential matrix_potential(const Matrix2& a1, const Matrix2& a2, double t = 1.0);

/// Symmetric piecewise-linear potential that is its own calibrated subaction, with
/// maximal value beta on the orbit {1/3, 2/3}.
Potential self_subaction_potential(double alpha, double beta);

/// Log-derivative of the Farey-type forward map.
double log_farey_derivative(double y);

/// The period-two orbit {(3 - sqrt5)/2, (sqrt5 - 1)/2} of the Farey-type map.
inline const double kFareyOrbitLow = (3.0 - std::sqrt(5.0)) / 2.0;
inline const double kFareyOrbitHigh = (std::sqrt(5.0) - 1.0) / 2.0;

}  // namespace ergodic
