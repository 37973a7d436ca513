#include "ergodic/ruelle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace ergodic {

namespace {

// Tabulated preimage brackets and weights e^{A(tau_j x)}; zero weight marks inadmissible branches.
struct Transfer {
  std::vector<std::vector<Bracket>> at;
  std::vector<std::vector<double>> weight;

  Transfer(const GridSpec& grid, const BranchSystem& sys, const Potential& potential) {
    if (grid.mode != sys.mode || potential.mode != sys.mode) throw ShapeError("domain modes differ");
    for (const Branch& br : sys.branches) {
      std::vector<Bracket> a(std::size_t(grid.n));
      std::vector<double> w(std::size_t(grid.n), 0.0);
      for (Eigen::Index i = 0; i < grid.n; ++i) {
        const double y = br.map(GridFunction::node(grid, i));
        if (!potential.defined_at(y) || !grid.support.contains(y, 1e-12 * grid.support.width())) continue;
        a[std::size_t(i)] = locate(grid, std::clamp(y, grid.support.lo, grid.support.hi));
        w[std::size_t(i)] = std::exp(potential(y));
      }
      at.push_back(std::move(a));
      weight.push_back(std::move(w));
    }
  }

  GridFunction apply(const GridFunction& f) const {
    GridFunction::Values out = GridFunction::Values::Zero(f.size());
    for (std::size_t j = 0; j < at.size(); ++j) {
      for (Eigen::Index i = 0; i < f.size(); ++i) {
        const double w = weight[j][std::size_t(i)];
        if (w != 0.0) out[i] += w * eval(f, at[j][std::size_t(i)]);
      }
    }
    return GridFunction(std::move(out), f.mode(), f.support());
  }
};

GridFunction log_step_raw(const Transfer& op, const GridFunction& g) {
  const GridFunction lg = op.apply(GridFunction(g.values().exp(), g.mode(), g.support()));
  if ((lg.values() <= 0.0).any()) throw CoverageError("transfer operator vanishes at a grid point");
  GridFunction::Values raw = 0.5 * g.values() + 0.5 * lg.values().log();
  return GridFunction(std::move(raw), g.mode(), g.support());
}

GridFunction normalize_at_half(const GridFunction& raw) {
  const double c = eval(raw, 0.5);
  return GridFunction(raw.values() - c, raw.mode(), raw.support());
}

}  // namespace

GridFunction ruelle_apply(const GridFunction& f, const BranchSystem& sys, const Potential& potential) {
  if ((f.values() < 0.0).any()) throw DomainError("transfer operator needs a nonnegative function");
  return Transfer(f.spec(), sys, potential).apply(f);
}

GridFunction half_log_step_raw(const GridFunction& g, const BranchSystem& sys, const Potential& potential) {
  return log_step_raw(Transfer(g.spec(), sys, potential), g);
}

GridFunction half_log_step(const GridFunction& g, const BranchSystem& sys, const Potential& potential) {
  return normalize_at_half(half_log_step_raw(g, sys, potential));
}

RuelleResult eigen_solve(const BranchSystem& sys, const Potential& potential, const SolverConfig& cfg) {
  cfg.validate();
  const GridSpec grid = sys.grid(cfg.n);
  const Bracket mid = locate(grid, 0.5);
  if (mid.weight != 0.0) throw ParameterError("grid must contain 0.5 as a node");
  const Transfer op(grid, sys, potential);

  RuelleResult r{GridFunction::constant(grid, 0.0)};
  const int steps = cfg.fixed_iterations.value_or(cfg.max_iter);
  r.last_gap = std::numeric_limits<double>::infinity();
  while (r.iterations < steps) {
    GridFunction next = normalize_at_half(log_step_raw(op, r.h));
    r.last_gap = sup_distance(next, r.h);
    if (!std::isfinite(r.last_gap)) throw NumericError("log-domain iteration diverged");
    r.h = std::move(next);
    ++r.iterations;
    r.converged = r.last_gap < cfg.tol;
    if (r.converged && !cfg.fixed_iterations) break;
  }

  const GridFunction phi(r.h.values().exp(), grid.mode, grid.support);
  const GridFunction lphi = op.apply(phi);
  r.lambda = eval(lphi, 0.4) / eval(phi, 0.4);
  std::vector<double> ratio(std::size_t(grid.n));
  for (Eigen::Index i = 0; i < grid.n; ++i) ratio[std::size_t(i)] = lphi[i] / phi[i];
  std::nth_element(ratio.begin(), ratio.begin() + std::ptrdiff_t(ratio.size() / 2), ratio.end());
  r.lambda_median = ratio[ratio.size() / 2];
  r.residual = (lphi.values() - r.lambda * phi.values()).abs().maxCoeff() / phi.values().maxCoeff();
  return r;
}

}  // namespace ergodic
