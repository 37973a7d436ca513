#pragma once

#include <array>
#include <functional>
#include <utility>

#include "ergodic/systems.hpp"

namespace ergodic {

// Closed-form and series subactions used as oracles for the numeric solver.
// Subactions are defined up to an additive constant; compare them after sup-normalizing.

/// V(x) = sum_{i < n_terms} [F(eta^i x) - K], with q the fixed point of eta.
struct SeriesSubaction {
  RealMap F;
  RealMap eta;
  double K = 0.0;
  double fixed_point = 0.0;
  int n_terms = 30;
  /// Bound on the tail beyond n terms, when known.
  std::function<double(int)> error_bound;
};

double series_eval(const SeriesSubaction& s, double x);
double series_eval(const SeriesSubaction& s, double x, int n_terms);

struct PieceValue {
  double value;
  int piece;  // 0-based index of the maximizing piece
};

/// Max of the four quadratic pieces for A = -(x - 1/3)^2 under doubling; m = -2/63.
PieceValue quadratic_exact(double x);

/// The four pieces individually.
std::array<double, 4> quadratic_pieces(double x);

/// 2 log(x + y - 2xy).
double involution_kernel(double x, double y);

/// Inverse of the natural extension of the Farey-type map on the cylinder containing y.
std::pair<double, double> farey_extension_inverse(double y, double x);

/// |A(x') + W(y', x') - W(y, x) - A(y)| with (y', x') = farey_extension_inverse(y, x).
double kernel_cocycle_residual(double y, double x);

/// max of the kernel slices at the period-two orbit; calibrated for log_farey.
double farey_exact(double x);

/// max(-2 log x, -2 log(1 - x)); calibrated for neg_log_farey with m = 0. Unbounded at 0 and 1.
double neg_farey_exact(double x);

/// Tail bound 2 pi / (3 4^(n-1)) for the sin^2 series truncated after n paired terms.
double sinsq_tail_bound(int n_terms);

/// F(y) = sin^2(pi y) + sin^2(pi y / 2), eta(y) = y/4 + 1/2, K = 3/2, q = 2/3.
SeriesSubaction sinsq_instance(int n_terms = 30);

struct SinSqValue {
  double v1;     // V2(1 - x)
  double v2;     // the series centred at 2/3
  double value;  // max(v1, v2)
};

/// Truncated sin^2 series. n_terms counts paired terms, each contracting by 1/4, so that
/// the truncation error is at most sinsq_tail_bound(n_terms).
SinSqValue sinsq_series(double x, int n_terms = 30);

/// Power series of V2 about 2/3 with k_order terms in each of the odd and even parts.
double sinsq_power(double x, int k_order = 25);

struct SinSeriesValue {
  std::array<double, 5> pieces;
  double value;  // max of the pieces
};

/// V1 from the centred series (zero at 1/15), V2..V5 by V_{k+1}(x) = V_k(x/2) + A(x/2) - m.
SinSeriesValue sin_series(double x, int n_terms = 30);

/// The centred series for V1 alone.
double sin_series_v1(double x, int n_terms = 30);

/// V1(x) - V1(x') from the four-term F/eta form with eta(x) = (x + 1)/16 (no centring constants).
double sin_v1_difference(double x, double x_ref, int n_terms = 30);

/// Birkhoff average of sin(2 pi x) on {1/15, 2/15, 4/15, 8/15}.
double sin_maximal_value();

/// (3 + sqrt17)/2; the joint spectral radius of the first matrix example.
double jsr_example1_b();

/// max(log(x + b), log(1 - x + b)) on the working interval [1/3, 2/3].
double jsr_exact_example1(double x);

/// sum_{i < n_factors} log((11 + 3 eta^i x) / (11 + 3 q)), eta = tau_2 o tau_1, q its fixed point.
double jsr_example1_product(double x, int n_factors = 50);

struct ParametricJsr {
  double value;
  double m;
  int regime;  // 1 for t in [0, t1], 2 for t in [t2, t3]
};

double jsr_t1();  // 4(4 + 3 sqrt2)/(18 + 13 sqrt2)
double jsr_t2();
double jsr_t3();

/// Exact subaction for A1 = [[2,1],[2,2]] and t A2 with A2 = [[2,2],[1,2]].
/// Throws UnsupportedParameterError outside [0, t1] and [t2, t3].
ParametricJsr jsr_exact_parametric(double x, double t);

enum class CantorSeries { G, H };

/// CONJECTURAL. G(x) = sum_{i=1..n} A(tau_1^i x); H(x) = sum_{i=1..n} A(tau_1 eta^i x) + A(tau_2 tau_1 eta^i x)
/// with eta = tau_2 o tau_1 and A = -d(., K).
double cantor_conjecture_series(double x, CantorSeries which, int n_terms = 40);

/// CONJECTURAL. The symmetric assembly S(x) for x < 1/2, S(1 - x) otherwise.
double cantor_conjecture_assembled(double x, CantorSeries which, int n_terms = 40);

}  // namespace ergodic
