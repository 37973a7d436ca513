#pragma once

#include "ergodic/grid.hpp"
#include "ergodic/potentials.hpp"
#include "ergodic/solver.hpp"
#include "ergodic/systems.hpp"

namespace ergodic {

struct RuelleResult {
  GridFunction h;  // log-eigenfunction with h(0.5) = 0
  double lambda = 0.0;         // L(e^h)(0.4) / e^h(0.4)
  double lambda_median = 0.0;  // median over the grid of L(e^h) / e^h
  double residual = 0.0;       // sup|L e^h - lambda e^h| / sup e^h
  int iterations = 0;
  double last_gap = 0.0;
  bool converged = false;
};

/// (L f)(x) = sum_j e^{A(tau_j x)} f(tau_j x).
GridFunction ruelle_apply(const GridFunction& f, const BranchSystem& sys, const Potential& potential);

/// g/2 + log(L e^g)/2 before normalization.
GridFunction half_log_step_raw(const GridFunction& g, const BranchSystem& sys, const Potential& potential);

/// half_log_step_raw(g) minus its value at 0.5.
GridFunction half_log_step(const GridFunction& g, const BranchSystem& sys, const Potential& potential);

/// Iterates half_log_step from g = 0 until the sup gap drops below cfg.tol. The grid must
/// have 0.5 as a node.
RuelleResult eigen_solve(const BranchSystem& sys, const Potential& potential, const SolverConfig& cfg);

}  // namespace ergodic
