#include "ergodic/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ergodic/potentials.hpp"

namespace ergodic {

namespace {

using std::numbers::pi;
constexpr double sqrt2 = std::numbers::sqrt2;
const double sqrt17 = std::sqrt(17.0);
const double sqrt5609 = std::sqrt(5609.0);

double sin2(double x) {
  const double s = std::sin(x);
  return s * s;
}

}  // namespace

double series_eval(const SeriesSubaction& s, double x) { return series_eval(s, x, s.n_terms); }

double series_eval(const SeriesSubaction& s, double x, int n_terms) {
  if (n_terms < 1) throw ParameterError("series needs at least one term");
  double sum = 0.0, y = x;
  for (int i = 0; i < n_terms; ++i) {
    sum += s.F(y) - s.K;
    y = s.eta(y);
  }
  if (!std::isfinite(sum)) throw NumericError("series produced a non-finite value at x = " + std::to_string(x));
  return sum;
}

std::array<double, 4> quadratic_pieces(double x) {
  const double q = x * x / 3.0;
  return {10.0 / 63.0 - 2.0 * x / 21.0 - q, 5.0 / 63.0 + 2.0 * x / 7.0 - q, 10.0 * x / 21.0 - q,
          -5.0 / 63.0 + 4.0 * x / 7.0 - q};
}

PieceValue quadratic_exact(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("quadratic_exact needs x in [0,1]");
  const auto p = quadratic_pieces(x);
  const auto it = std::max_element(p.begin(), p.end());
  return {*it, int(it - p.begin())};
}

double involution_kernel(double x, double y) {
  const double arg = x + y - 2.0 * x * y;
  if (!(arg > 0.0)) throw DomainError("involution kernel needs x + y - 2xy > 0");
  return 2.0 * std::log(arg);
}

std::pair<double, double> farey_extension_inverse(double y, double x) {
  if (y <= 0.5) return {y / (1.0 - y), x / (1.0 + x)};
  return {2.0 - 1.0 / y, 1.0 / (2.0 - x)};
}

double kernel_cocycle_residual(double y, double x) {
  const auto [yp, xp] = farey_extension_inverse(y, x);
  return std::abs(log_farey_derivative(xp) + involution_kernel(yp, xp) - involution_kernel(y, x) -
                  log_farey_derivative(y));
}

double farey_exact(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("farey_exact needs x in [0,1]");
  return std::max(involution_kernel(kFareyOrbitLow, x), involution_kernel(kFareyOrbitHigh, x));
}

double neg_farey_exact(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("neg_farey_exact is unbounded at 0 and 1");
  return std::max(-2.0 * std::log(x), -2.0 * std::log(1.0 - x));
}

double sinsq_tail_bound(int n_terms) { return 2.0 * pi / (3.0 * std::pow(4.0, n_terms - 1)); }

SeriesSubaction sinsq_instance(int n_terms) {
  SeriesSubaction s;
  s.F = [](double y) { return sin2(pi * y) + sin2(0.5 * pi * y); };
  s.eta = [](double y) { return 0.25 * y + 0.5; };
  s.K = 1.5;
  s.fixed_point = 2.0 / 3.0;
  s.n_terms = n_terms;
  s.error_bound = sinsq_tail_bound;
  return s;
}

SinSqValue sinsq_series(double x, int n_terms) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("sinsq_series needs x in [0,1]");
  if (n_terms < 1) throw ParameterError("sinsq_series needs at least one term");
  // sum over i < 2n of sin^2(pi(2/3 + (-1/2)^i (x - 2/3))) - 3/4
  auto v2 = [n_terms](double u) {
    const double c = sin2(2.0 * pi / 3.0);
    double sum = 0.0, r = 1.0;
    for (int i = 0; i < 2 * n_terms; ++i) {
      sum += sin2(pi * (2.0 / 3.0 + r * (u - 2.0 / 3.0))) - c;
      r *= -0.5;
    }
    return sum;
  };
  const double b = v2(x), a = v2(1.0 - x);
  return {a, b, std::max(a, b)};
}

double sinsq_power(double x, int k_order) {
  if (k_order < 1) throw ParameterError("sinsq_power needs k_order >= 1");
  if (!(std::abs(x - 2.0 / 3.0) < 1.0)) throw DomainError("sinsq_power needs |x - 2/3| < 1");
  const double u = 2.0 * pi * (x - 2.0 / 3.0);
  double odd = 0.0, even = 0.0;
  double term = u;  // u^(2k+1)/(2k+1)!
  for (int k = 0; k < k_order; ++k) {
    const double p = std::ldexp(1.0, 2 * k + 1);
    odd += (k % 2 ? -term : term) * p / (p + 1.0);
    term *= u * u / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  term = u * u / 2.0;  // u^(2k)/(2k)!
  for (int k = 1; k <= k_order; ++k) {
    const double p = std::ldexp(1.0, 2 * k);
    even += (k % 2 ? -term : term) * p / (p - 1.0);
    term *= u * u / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
  }
  return 0.5 * std::sin(4.0 * pi / 3.0) * odd - 0.5 * std::cos(4.0 * pi / 3.0) * even;
}

double sin_maximal_value() {
  double s = 0.0;
  for (int k = 0; k < 4; ++k) s += std::sin(2.0 * pi * double(1 << k) / 15.0);
  return s / 4.0;
}

double sin_series_v1(double x, int n_terms) {
  if (n_terms < 1) throw ParameterError("sin_series needs at least one term");
  double sum = 0.0;
  for (int m = 0; m < n_terms; ++m) {
    const double scale = std::pow(16.0, -m);
    const double arg = x * scale + (16.0 - scale) / 15.0;
    for (int j = 0; j < 4; ++j) {
      sum += std::sin(pi * std::ldexp(arg, -j)) - std::sin(2.0 * pi * double(1 << (3 - j)) / 15.0);
    }
  }
  return sum;
}

SinSeriesValue sin_series(double x, int n_terms) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("sin_series needs x in [0,1]");
  const double m = sin_maximal_value();
  SinSeriesValue out{};
  // V_{k+1}(x) = V_1(x / 2^k) + sum_{i=1..k} A(x / 2^i) - k m
  double carry = 0.0;
  for (int k = 0; k < 5; ++k) {
    if (k > 0) carry += std::sin(2.0 * pi * std::ldexp(x, -k)) - m;
    out.pieces[std::size_t(k)] = sin_series_v1(std::ldexp(x, -k), n_terms) + carry;
  }
  out.value = *std::max_element(out.pieces.begin(), out.pieces.end());
  return out;
}

double sin_v1_difference(double x, double x_ref, int n_terms) {
  auto F = [](double y) {
    double s = 0.0;
    for (int j = 1; j <= 4; ++j) s += std::sin(2.0 * pi * std::ldexp(y + 1.0, -j));
    return s;
  };
  double sum = 0.0;
  for (int i = 0; i < n_terms; ++i) {
    sum += F(x) - F(x_ref);
    x = (x + 1.0) / 16.0;
    x_ref = (x_ref + 1.0) / 16.0;
  }
  return sum;
}

double jsr_example1_b() { return 0.5 * (3.0 + sqrt17); }

double jsr_exact_example1(double x) {
  if (!(x >= 1.0 / 3.0 - 1e-12 && x <= 2.0 / 3.0 + 1e-12)) {
    throw DomainError("jsr_exact_example1 needs x in [1/3, 2/3]");
  }
  const double b = jsr_example1_b();
  return std::max(std::log(x + b), std::log(1.0 - x + b));
}

double jsr_example1_product(double x, int n_factors) {
  const double q = 0.5 * (sqrt17 - 3.0);
  auto eta = [](double y) {
    const double z = (y + 1.0) / (y + 3.0);
    return 2.0 / (4.0 - z);
  };
  double sum = 0.0;
  for (int i = 0; i < n_factors; ++i) {
    sum += std::log((11.0 + 3.0 * x) / (11.0 + 3.0 * q));
    x = eta(x);
  }
  return sum;
}

double jsr_t1() { return 4.0 * (4.0 + 3.0 * sqrt2) / (18.0 + 13.0 * sqrt2); }
double jsr_t2() { return (367765714335.0 - 4904055941.0 * sqrt5609) / 533794816.0; }
double jsr_t3() { return (1900479599391.0 + 25366638853.0 * sqrt5609) / 4162416040000.0; }

ParametricJsr jsr_exact_parametric(double x, double t) {
  if (!(x >= 1.0 / 3.0 - 1e-12 && x <= 2.0 / 3.0 + 1e-12)) {
    throw DomainError("jsr_exact_parametric needs x in [1/3, 2/3]");
  }
  if (t >= 0.0 && t <= jsr_t1()) {
    const double v = std::max(std::log(x + 1.0 + sqrt2), std::log(t * (2.0 + sqrt2 - x / sqrt2)));
    return {v, std::log(2.0 + sqrt2), 1};
  }
  if (t >= jsr_t2() && t <= jsr_t3()) {
    const double b = (89.0 + sqrt5609) / 34.0;
    const double m = 0.25 * std::log((75.0 + sqrt5609) * t);
    const double d = std::exp(-m);
    const double v = std::max({std::log(b - x), std::log(d * (b * (3.0 + x) - 1.0 - x)),
                               std::log(2.0 * d * d * (b * (5.0 + 2.0 * x) - 2.0 - x)),
                               std::log(2.0 * d * d * d * (b * (17.0 + 7.0 * x) - 7.0 - 3.0 * x))});
    return {v, m, 2};
  }
  throw UnsupportedParameterError("no closed form for t = " + std::to_string(t) +
                                  "; valid windows are [0, t1] and [t2, t3]");
}

double cantor_conjecture_series(double x, CantorSeries which, int n_terms) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("cantor series needs x in [0,1]");
  if (n_terms < 1) throw ParameterError("cantor series needs at least one term");
  double sum = 0.0;
  if (which == CantorSeries::G) {
    for (int i = 1; i <= n_terms; ++i) sum += cantor_distance(std::ldexp(x, -i));
    return sum;
  }
  double y = x;
  for (int i = 1; i <= n_terms; ++i) {
    y = 0.5 * (0.5 * y + 1.0);  // eta = tau_2 o tau_1
    const double a = 0.5 * y;
    sum += cantor_distance(a) + cantor_distance(0.5 * (a + 1.0));
  }
  return sum;
}

double cantor_conjecture_assembled(double x, CantorSeries which, int n_terms) {
  return x < 0.5 ? cantor_conjecture_series(x, which, n_terms) : cantor_conjecture_series(1.0 - x, which, n_terms);
}

}  // namespace ergodic
