#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "ergodic/grid.hpp"

namespace ergodic {

using RealMap = std::function<double(double)>;

/// Row-major 2x2 matrix [[a, b], [c, d]].
using Matrix2 = Eigen::Matrix2d;

inline Matrix2 make_matrix2(double a, double b, double c, double d) {
  Matrix2 m;
  m << a, b, c, d;
  return m;
}

/// Coefficients of the linear-fractional map x -> (p x + q) / (r x + s), stored as [[p, q], [r, s]].
/// Composition of maps is the matrix product.
using MobiusCoefficients = Eigen::Matrix2d;

double mobius_apply(const MobiusCoefficients& c, double x);
double mobius_derivative(const MobiusCoefficients& c, double x);
double mobius_inverse(const MobiusCoefficients& c, double y);
/// |(tau^{-1})'(y)| in closed form.
double mobius_inverse_derivative(const MobiusCoefficients& c, double y);

/// Contracting inverse branch of a dynamical system.
struct Branch {
  RealMap map;
  Interval image;
  RealMap derivative;
  RealMap inverse;  // empty when no closed form is known
  std::optional<MobiusCoefficients> mobius;
};

enum class SystemKind { doubling, farey, mobius };

/// Ordered pair of inverse branches; index 0 is always the left branch tau_1.
struct BranchSystem {
  SystemKind kind;
  std::vector<Branch> branches;
  RealMap forward;  // empty for iterated function systems
  DomainMode mode = DomainMode::interval;
  Interval working_interval{};

  bool has_forward() const { return static_cast<bool>(forward); }
  GridSpec grid(Eigen::Index n) const { return {n, mode, working_interval}; }
};

/// tau_1(x) = x/2, tau_2(x) = (x+1)/2 with T(x) = 2x mod 1.
BranchSystem doubling_system(DomainMode mode);

/// tau_1(x) = x/(1+x), tau_2(x) = 1/(2-x); forward map y/(1-y) on [0,1/2], 2 - 1/y on (1/2,1].
/// tau_1 is indifferent at 0, so contraction only holds away from 0.
BranchSystem farey_like_system();

/// Iterated function system of the projective actions of two nonnegative 2x2 matrices
/// on [0,1]. The working interval is the convex hull of the two branch images.
BranchSystem mobius_system(const Matrix2& a1, const Matrix2& a2);

/// Coefficients [[p,q],[r,s]] of the branch induced by a matrix [[a,b],[c,d]].
MobiusCoefficients mobius_from_matrix(const Matrix2& m);

}  // namespace ergodic
