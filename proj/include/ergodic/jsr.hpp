#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ergodic/solver.hpp"
#include "ergodic/systems.hpp"

namespace ergodic {

struct JsrResult {
  double rho = 0.0;  // e^m
  double m = 0.0;
  SubactionResult subaction;
  std::optional<double> t;
  /// Largest individual spectral radius of A1 and t A2; rho should not fall below it.
  double max_single_radius = 0.0;
  /// Non-empty when the inputs fail a positivity spot-check, so rho is only an estimate of m.
  std::string note;
};

/// Spectral radius of a 2x2 matrix.
double spectral_radius(const Matrix2& a);

/// Solves for the calibrated subaction of the matrix potential on the Mobius system of
/// (A1, t A2) and reports rho = e^m.
JsrResult joint_spectral_radius(const Matrix2& a1, const Matrix2& a2, const SolverConfig& cfg, double t = 1.0);

struct ScanPoint {
  double t = 0.0;
  std::optional<JsrResult> result;
  std::string error;  // set when this t could not be solved
};

/// One solve per t; per-point failures are recorded and the scan continues.
std::vector<ScanPoint> t_scan(const Matrix2& a1, const Matrix2& a2, const std::vector<double>& t_values,
                              const SolverConfig& cfg);

/// Parses "lo:hi:step" into the inclusive list lo, lo + step, ..., stopping at hi.
std::vector<double> parse_range(const std::string& spec);

}  // namespace ergodic
