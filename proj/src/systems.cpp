#include "ergodic/systems.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ergodic {

double mobius_apply(const MobiusCoefficients& c, double x) {
  return (c(0, 0) * x + c(0, 1)) / (c(1, 0) * x + c(1, 1));
}

double mobius_derivative(const MobiusCoefficients& c, double x) {
  const double den = c(1, 0) * x + c(1, 1);
  return c.determinant() / (den * den);
}

double mobius_inverse(const MobiusCoefficients& c, double y) {
  return (c(1, 1) * y - c(0, 1)) / (c(0, 0) - c(1, 0) * y);
}

double mobius_inverse_derivative(const MobiusCoefficients& c, double y) {
  const double den = c(0, 0) - c(1, 0) * y;
  return std::abs(c.determinant() / (den * den));
}

namespace {

Branch mobius_branch(const MobiusCoefficients& c) {
  const double y0 = mobius_apply(c, 0.0);
  const double y1 = mobius_apply(c, 1.0);
  return Branch{
      [c](double x) { return mobius_apply(c, x); },
      Interval{std::min(y0, y1), std::max(y0, y1)},
      [c](double x) { return mobius_derivative(c, x); },
      [c](double y) { return mobius_inverse(c, y); },
      c,
  };
}

}  // namespace

BranchSystem doubling_system(DomainMode mode) {
  MobiusCoefficients left, right;
  left << 1, 0, 0, 2;
  right << 1, 1, 0, 2;
  BranchSystem sys{SystemKind::doubling, {mobius_branch(left), mobius_branch(right)}, {}, mode, {0.0, 1.0}};
  if (mode == DomainMode::periodic) {
    sys.forward = [](double x) {
      const double y = 2.0 * x;
      return y >= 1.0 ? y - 1.0 : y;
    };
  } else {
    sys.forward = [](double x) { return x <= 0.5 ? 2.0 * x : 2.0 * x - 1.0; };
  }
  // exact forms avoid a division in the hot path
  sys.branches[0].map = [](double x) { return 0.5 * x; };
  sys.branches[1].map = [](double x) { return 0.5 * (x + 1.0); };
  sys.branches[0].inverse = [](double y) { return 2.0 * y; };
  sys.branches[1].inverse = [](double y) { return 2.0 * y - 1.0; };
  return sys;
}

BranchSystem farey_like_system() {
  MobiusCoefficients left, right;
  left << 1, 0, 1, 1;
  right << 0, 1, -1, 2;
  BranchSystem sys{SystemKind::farey, {mobius_branch(left), mobius_branch(right)}, {},
                   DomainMode::interval, {0.0, 1.0}};
  sys.forward = [](double y) { return y <= 0.5 ? y / (1.0 - y) : 2.0 - 1.0 / y; };
  return sys;
}

MobiusCoefficients mobius_from_matrix(const Matrix2& m) {
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  MobiusCoefficients coef;
  coef << a - b, b, a + c - d - b, b + d;
  return coef;
}

BranchSystem mobius_system(const Matrix2& a1, const Matrix2& a2) {
  std::vector<Branch> branches;
  for (const Matrix2* m : {&a1, &a2}) {
    if ((m->array() < 0.0).any()) throw ConstructionError("matrix entries must be nonnegative");
    const double det = m->determinant();
    if (det == 0.0) throw ConstructionError("matrix is singular");
    if (det < 0.0) throw ConstructionError("negative determinant gives a reversed branch image");
    const MobiusCoefficients c = mobius_from_matrix(*m);
    const double den0 = c(1, 1), den1 = c(1, 0) + c(1, 1);
    if (!(den0 * den1 > 0.0)) throw ConstructionError("branch denominator vanishes on [0,1]");
    Branch br = mobius_branch(c);
    if (!std::isfinite(br.image.lo) || !std::isfinite(br.image.hi) || br.image.lo < 0.0 ||
        br.image.hi > 1.0) {
      throw ConstructionError("branch image [" + std::to_string(br.image.lo) + ", " +
                              std::to_string(br.image.hi) + "] is not inside [0,1]");
    }
    // |tau'| is largest where |r x + s| is smallest, i.e. at an endpoint
    const double lip = std::max(std::abs(mobius_derivative(c, 0.0)), std::abs(mobius_derivative(c, 1.0)));
    if (!(lip < 1.0)) throw ConstructionError("branch is not a contraction of [0,1]");
    branches.push_back(std::move(br));
  }
  const Interval hull{std::min(branches[0].image.lo, branches[1].image.lo),
                      std::max(branches[0].image.hi, branches[1].image.hi)};
  return BranchSystem{SystemKind::mobius, std::move(branches), {}, DomainMode::interval, hull};
}

}  // namespace ergodic
