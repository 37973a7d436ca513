#pragma once

#include <algorithm>
#include <cmath>
#include <iosfwd>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "ergodic/error.hpp"

namespace ergodic {

/// Periodic grids identify the right endpoint with the left one (circle view);
/// interval grids include both endpoints.
enum class DomainMode { periodic, interval };

std::string to_string(DomainMode mode);
DomainMode parse_domain_mode(const std::string& text);

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double width() const { return hi - lo; }
  bool contains(double x, double slack = 0.0) const { return x >= lo - slack && x <= hi + slack; }
};

/// Resolution and support of a uniform grid.
struct GridSpec {
  Eigen::Index n = 10000;
  DomainMode mode = DomainMode::periodic;
  Interval support{};

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.n == b.n && a.mode == b.mode && a.support.lo == b.support.lo &&
           a.support.hi == b.support.hi;
  }
};

/// Adjacent nodes bracketing a point and the linear weight of the right one.
/// `weight == 0` means the point sits exactly on node `left`.
struct Bracket {
  Eigen::Index left = 0;
  Eigen::Index right = 0;
  double weight = 0.0;
};

/// Real function sampled on a uniform grid, evaluated by piecewise-linear interpolation.
///
/// Interval mode samples x_i = lo + i (hi - lo) / (N - 1), i = 0..N-1.
/// Periodic mode samples x_i = lo + i (hi - lo) / N and wraps x = hi onto x = lo.
/// Instances are immutable; every value is finite.
template <typename Scalar>
class BasicGridFunction {
 public:
  using Values = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

  BasicGridFunction(Values values, DomainMode mode, Interval support = {})
      : values_(std::move(values)), mode_(mode), support_(support) {
    if (values_.size() < 2) throw ShapeError("grid function needs at least 2 samples");
    if (!(support_.hi > support_.lo)) throw ShapeError("grid support must have positive width");
    if (!values_.allFinite()) throw NumericError("grid function values must be finite");
  }

  template <typename F>
  static BasicGridFunction sample(const GridSpec& spec, F&& f) {
    Values v(spec.n);
    for (Eigen::Index i = 0; i < spec.n; ++i) v[i] = static_cast<Scalar>(f(node(spec, i)));
    return BasicGridFunction(std::move(v), spec.mode, spec.support);
  }

  static BasicGridFunction constant(const GridSpec& spec, Scalar c) {
    return BasicGridFunction(Values::Constant(spec.n, c), spec.mode, spec.support);
  }

  static double node(const GridSpec& spec, Eigen::Index i) {
    const double den = spec.mode == DomainMode::interval ? double(spec.n - 1) : double(spec.n);
    return spec.support.lo + spec.support.width() * (double(i) / den);
  }

  static double step(const GridSpec& spec) {
    return spec.support.width() /
           (spec.mode == DomainMode::interval ? double(spec.n - 1) : double(spec.n));
  }

  Eigen::Index size() const { return values_.size(); }
  DomainMode mode() const { return mode_; }
  const Interval& support() const { return support_; }
  GridSpec spec() const { return {size(), mode_, support_}; }
  const Values& values() const { return values_; }
  Scalar operator[](Eigen::Index i) const { return values_[i]; }
  double node(Eigen::Index i) const { return node(spec(), i); }
  double step() const { return step(spec()); }

 private:
  Values values_;
  DomainMode mode_;
  Interval support_;
};

using GridFunction = BasicGridFunction<double>;

/// Locates x on the grid. Points within a few ulps of a node snap onto it so that
/// evaluation at nodes is exact.
inline Bracket locate(const GridSpec& spec, double x) {
  const Interval& s = spec.support;
  const double slack = 1e-12 * s.width();
  if (!(x >= s.lo - slack && x <= s.hi + slack)) {
    throw DomainError("point " + std::to_string(x) + " outside grid support [" +
                      std::to_string(s.lo) + ", " + std::to_string(s.hi) + "]");
  }
  const Eigen::Index cells = spec.mode == DomainMode::interval ? spec.n - 1 : spec.n;
  double pos = (x - s.lo) / s.width() * double(cells);
  pos = std::clamp(pos, 0.0, double(cells));
  const double nearest = std::round(pos);
  if (std::abs(pos - nearest) <= 1e-9) {
    Eigen::Index k = static_cast<Eigen::Index>(nearest);
    if (k == cells) k = spec.mode == DomainMode::periodic ? 0 : cells;
    return {k, k, 0.0};
  }
  Eigen::Index left = static_cast<Eigen::Index>(std::floor(pos));
  Eigen::Index right = left + 1;
  if (right == spec.n) right = 0;  // periodic wrap; interval mode never reaches here
  return {left, right, pos - double(left)};
}

template <typename Scalar>
Scalar eval(const BasicGridFunction<Scalar>& gf, const Bracket& b) {
  const Scalar lv = gf[b.left];
  if (b.weight == 0.0) return lv;
  return lv + static_cast<Scalar>(b.weight) * (gf[b.right] - lv);
}

/// Piecewise-linear interpolant at x; throws DomainError outside the support.
template <typename Scalar>
Scalar eval(const BasicGridFunction<Scalar>& gf, double x) {
  return eval(gf, locate(gf.spec(), x));
}

/// Shifts gf so that its maximum sample is exactly 0; returns the removed maximum.
template <typename Scalar>
std::pair<BasicGridFunction<Scalar>, Scalar> sup_normalize(const BasicGridFunction<Scalar>& gf) {
  const Scalar top = gf.values().maxCoeff();
  typename BasicGridFunction<Scalar>::Values shifted = gf.values() - top;
  return {BasicGridFunction<Scalar>(std::move(shifted), gf.mode(), gf.support()), top};
}

template <typename Scalar>
void require_same_grid(const BasicGridFunction<Scalar>& f, const BasicGridFunction<Scalar>& g) {
  if (!(f.spec() == g.spec())) throw ShapeError("grid functions live on different grids");
}

template <typename Scalar>
Scalar sup_distance(const BasicGridFunction<Scalar>& f, const BasicGridFunction<Scalar>& g) {
  require_same_grid(f, g);
  return (f.values() - g.values()).abs().maxCoeff();
}

/// Writes `x,value` rows with 17 significant digits.
void write_csv(std::ostream& out, const GridFunction& gf);
void write_csv(const std::string& path, const GridFunction& gf);

/// Reads one value column of a CSV whose first column is x. The grid support is
/// recovered from the x column; periodic grids are assumed to omit the right endpoint.
GridFunction read_csv(std::istream& in, DomainMode mode, const std::string& column = "value");
GridFunction read_csv(const std::string& path, DomainMode mode, const std::string& column = "value");

}  // namespace ergodic
