#include "ergodic/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ergodic {

namespace {

using std::numbers::pi;

void expect_params(std::string_view name, std::span<const double> params, std::size_t count) {
  if (params.size() != count) {
    throw ParameterError(std::string(name) + " expects " + std::to_string(count) + " parameter(s), got " +
                         std::to_string(params.size()));
  }
}

Potential make(std::string name, RealMap f, bool symmetric, DomainMode mode) {
  Potential p;
  p.name = std::move(name);
  p.eval = std::move(f);
  p.symmetric = symmetric;
  p.mode = mode;
  return p;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "quadratic_third", "sin_sq", "sin",        "log_farey",         "neg_log_farey", "quartic_pair",
      "octic",           "cantor_dist", "cantor_dist_trunc", "matrix_pot", "self_subaction"};
  return names;
}

double log_farey_derivative(double y) {
  return y <= 0.5 ? -2.0 * std::log(1.0 - y) : -2.0 * std::log(y);
}

double cantor_distance(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("cantor_distance needs x in [0,1]");
  double lo = 0.0, len = 1.0;
  for (int level = 0; level < 64; ++level) {
    const double third = len / 3.0;
    const double a = lo + third, b = lo + 2.0 * third;
    if (x == lo || x == lo + len || x == a || x == b) return 0.0;
    if (x < a) {
      len = third;
    } else if (x > b) {
      lo = b;
      len = third;
    } else {
      // inside the removed middle third: the gap endpoints are the nearest points of K
      return -std::min(x - a, b - x);
    }
  }
  return -std::min(x - lo, lo + len - x);
}

double cantor_distance_trunc(double x, int n) {
  if (n < 1 || n > 40) throw ParameterError("cantor_distance_trunc needs 1 <= n <= 40");
  double centre = 0.5, step = 1.0;
  for (int i = 1; i <= n; ++i) {
    step /= 3.0;
    centre += x >= centre ? step : -step;
  }
  return -std::abs(x - centre);
}

Potential constant_potential(double value, DomainMode mode) {
  Potential p = make("constant", [value](double) { return value; }, true, mode);
  p.known_m = value;
  return p;
}

Potential matrix_potential(const Matrix2& a1, const Matrix2& a2, double t) {
  if (!(t > 0.0)) throw ParameterError("matrix_potential needs t > 0");
  const double det1 = a1.determinant();
  const double det2 = t * t * a2.determinant();
  if (!(det1 > 0.0) || !(det2 > 0.0)) throw ConstructionError("matrix_potential needs positive determinants");
  const BranchSystem sys = mobius_system(a1, t * a2);
  const MobiusCoefficients c1 = *sys.branches[0].mobius;
  const MobiusCoefficients c2 = *sys.branches[1].mobius;
  const Interval i1 = sys.branches[0].image, i2 = sys.branches[1].image;
  const double slack = 1e-12;
  auto f = [=](double x) {
    if (i1.contains(x, slack)) return 0.5 * (std::log(mobius_inverse_derivative(c1, x)) + std::log(det1));
    if (i2.contains(x, slack)) return 0.5 * (std::log(mobius_inverse_derivative(c2, x)) + std::log(det2));
    throw DomainError("matrix potential evaluated outside the branch images at x = " + std::to_string(x));
  };
  Potential p = make("matrix_pot", f, false, DomainMode::interval);
  p.domain = sys.working_interval;
  return p;
}

Potential self_subaction_potential(double alpha, double beta) {
  if (!(alpha > 0.0)) throw ParameterError("self_subaction needs alpha > 0");
  auto half = [alpha, beta](double x) {
    return x < 1.0 / 3.0 ? alpha * (x - 1.0 / 3.0) + beta : alpha * (1.0 / 3.0 - x) + beta;
  };
  Potential p = make("self_subaction", [half](double x) { return x < 0.5 ? half(x) : half(1.0 - x); }, true,
                     DomainMode::periodic);
  p.known_m = beta;
  p.known_mather = {1.0 / 3.0, 2.0 / 3.0};
  return p;
}

Potential catalog(std::string_view name, std::span<const double> params) {
  if (name == "quadratic_third") {
    expect_params(name, params, 0);
    Potential p = make("quadratic_third", [](double x) { return -(x - 1.0 / 3.0) * (x - 1.0 / 3.0); }, false,
                       DomainMode::interval);
    p.known_m = -2.0 / 63.0;
    p.known_mather = {1.0 / 7.0, 2.0 / 7.0, 4.0 / 7.0};
    return p;
  }
  if (name == "sin_sq") {
    expect_params(name, params, 0);
    Potential p = make("sin_sq", [](double x) {
      const double s = std::sin(2.0 * pi * x);
      return s * s;
    }, true, DomainMode::periodic);
    p.known_m = 0.75;
    p.known_mather = {1.0 / 3.0, 2.0 / 3.0};
    return p;
  }
  if (name == "sin") {
    expect_params(name, params, 0);
    Potential p = make("sin", [](double x) { return std::sin(2.0 * pi * x); }, false, DomainMode::periodic);
    p.known_mather = {1.0 / 15.0, 2.0 / 15.0, 4.0 / 15.0, 8.0 / 15.0};
    double sum = 0.0;
    for (double q : p.known_mather) sum += p(q);
    p.known_m = sum / 4.0;
    return p;
  }
  if (name == "log_farey") {
    expect_params(name, params, 0);
    Potential p = make("log_farey", log_farey_derivative, true, DomainMode::interval);
    p.known_mather = {kFareyOrbitLow, kFareyOrbitHigh};
    p.known_m = 0.5 * (p(kFareyOrbitLow) + p(kFareyOrbitHigh));
    return p;
  }
  if (name == "neg_log_farey") {
    expect_params(name, params, 0);
    Potential p = make("neg_log_farey", [](double y) { return -log_farey_derivative(y); }, true,
                       DomainMode::interval);
    p.known_m = 0.0;
    p.known_mather = {0.0, 1.0};
    return p;
  }
  if (name == "quartic_pair") {
    expect_params(name, params, 0);
    Potential p = make("quartic_pair", [](double x) {
      const double u = (x - 1.0 / 3.0) * (x - 2.0 / 3.0);
      return -u * u;
    }, true, DomainMode::periodic);
    p.known_m = 0.0;
    p.known_mather = {1.0 / 3.0, 2.0 / 3.0};
    return p;
  }
  if (name == "octic") {
    expect_params(name, params, 0);
    Potential p = make("octic", [](double x) {
      const double u = x * (x - 1.0 / 3.0) * (x - 2.0 / 3.0) * (x - 1.0);
      return -u * u;
    }, true, DomainMode::periodic);
    p.known_m = 0.0;
    p.known_mather = {0.0, 1.0 / 3.0, 2.0 / 3.0};
    return p;
  }
  if (name == "cantor_dist") {
    expect_params(name, params, 0);
    Potential p = make("cantor_dist", cantor_distance, true, DomainMode::interval);
    // m = 0 is asserted without proof for this potential; every point of K has A = 0.
    p.known_m = 0.0;
    p.known_mather = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
    return p;
  }
  if (name == "cantor_dist_trunc") {
    expect_params(name, params, 1);
    const int n = static_cast<int>(params[0]);
    if (double(n) != params[0]) throw ParameterError("cantor_dist_trunc needs an integer level");
    cantor_distance_trunc(0.5, n);  // validates n
    return make("cantor_dist_trunc", [n](double x) { return cantor_distance_trunc(x, n); }, true,
                DomainMode::interval);
  }
  if (name == "matrix_pot") {
    if (params.size() != 8 && params.size() != 9) {
      throw ParameterError("matrix_pot expects 8 or 9 parameters, got " + std::to_string(params.size()));
    }
    const Matrix2 a1 = make_matrix2(params[0], params[1], params[2], params[3]);
    const Matrix2 a2 = make_matrix2(params[4], params[5], params[6], params[7]);
    return matrix_potential(a1, a2, params.size() == 9 ? params[8] : 1.0);
  }
  if (name == "self_subaction") {
    expect_params(name, params, 2);
    return self_subaction_potential(params[0], params[1]);
  }
  throw CatalogError("unknown potential '" + std::string(name) + "'");
}

}  // namespace ergodic
