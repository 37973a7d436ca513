#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "ergodic/grid.hpp"
#include "ergodic/potentials.hpp"
#include "ergodic/systems.hpp"

namespace ergodic {

struct SolverConfig {
  Eigen::Index n = 10000;
  double tol = 1e-10;
  int max_iter = 5000;
  double realizer_tie_tol = 1e-10;
  /// When set, run exactly this many steps and ignore the stopping rule.
  std::optional<int> fixed_iterations;

  /// Throws ParameterError on nonsensical values.
  void validate() const;
};

using Realizer = Eigen::ArrayXi;

struct BellmanResult {
  GridFunction value;
  Realizer realizer;
};

struct HalfStepResult {
  GridFunction next;  // sup-normalized
  GridFunction raw;   // (B f + f) / 2 before normalization
  Realizer realizer;
  double shift = 0.0;  // max of raw; twice it estimates m(A)
};

/// The max-plus step (B f)(x) = max_j [A(tau_j x) + f(tau_j x)] on a fixed grid.
///
/// Branch preimages, their interpolation brackets and the potential values there do not
/// depend on f, so they are tabulated once and reused by every iteration.
class BellmanOperator {
 public:
  BellmanOperator(const GridSpec& grid, const BranchSystem& sys, const Potential& potential,
                  double tie_tol = 1e-10);

  BellmanResult apply(const GridFunction& f) const;
  HalfStepResult half_step(const GridFunction& f) const;
  const GridSpec& grid() const { return grid_; }

 private:
  struct Preimage {
    Bracket at;
    double potential = 0.0;
    bool admissible = false;
  };

  GridSpec grid_;
  double tie_tol_;
  std::vector<std::vector<Preimage>> table_;  // [branch][node]
};

BellmanResult bellman_max(const GridFunction& f, const BranchSystem& sys, const Potential& potential,
                          double tie_tol = 1e-10);

/// One step of the averaged operator: ((B f + f) / 2) minus its supremum.
HalfStepResult half_step(const GridFunction& f, const BranchSystem& sys, const Potential& potential,
                         double tie_tol = 1e-10);

struct SubactionResult {
  GridFunction V;
  double m_estimate = 0.0;  // twice the final normalization shift
  double m_mean = 0.0;      // grid mean of B V - V
  Realizer realizer;
  GridFunction R;
  int iterations = 0;
  double residual = 0.0;  // max - min of B V - V
  double last_gap = 0.0;  // sup distance between the last two iterates
  bool converged = false;
  std::vector<double> gaps;
};

/// Iterates half_step from f0 until the sup-norm gap between iterates drops below
/// cfg.tol (or for cfg.fixed_iterations steps). Running out of iterations is reported
/// through `converged`, not thrown.
SubactionResult solve(const BranchSystem& sys, const Potential& potential, const GridFunction& f0,
                      const SolverConfig& cfg);

/// Convenience overload starting from f0 = 0 on the system's grid.
SubactionResult solve(const BranchSystem& sys, const Potential& potential, const SolverConfig& cfg);

/// R(x) = V(T x) - V(x) - A(x) + m on the grid.
///
/// Iterated function systems have no global T; there R at a grid point y is the minimum
/// over branches j with y in tau_j(W) of V(tau_j^{-1} y) - V(y) - A(y) + m, W the working
/// interval. Grid points outside every tau_j(W) are never preimages, carry no invariant
/// measure, and are filled with the largest computed value.
GridFunction compute_R(const GridFunction& V, double m, const BranchSystem& sys, const Potential& potential);

/// Per-branch deficiencies V(s) - V(tau_j s) - A(tau_j s) + m on the source grid.
std::vector<GridFunction> compute_R_branches(const GridFunction& V, double m, const BranchSystem& sys,
                                             const Potential& potential);

/// Maximal runs of consecutive grid points with R < threshold, as [x_first, x_last].
std::vector<Interval> mather_support(const GridFunction& R, double threshold);

/// sup over grid nodes of |max_j [A(tau_j x) + V(tau_j x)] - V(x) - m|.
double verify_subaction(const GridFunction& V, double m, const BranchSystem& sys, const Potential& potential);

/// Same residual for an analytic V at the given points; no interpolation involved.
double verify_subaction(const RealMap& V, double m, const BranchSystem& sys, const Potential& potential,
                        std::span<const double> points);

/// Tent of half-width epsilon and height k * epsilon centred at a, zero elsewhere.
GridFunction bump_initial(const GridSpec& grid, double epsilon, double a, double k = 1.0);

}  // namespace ergodic
