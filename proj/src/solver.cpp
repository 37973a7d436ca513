#include "ergodic/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ergodic {

void SolverConfig::validate() const {
  if (n < 2) throw ParameterError("grid-n must be at least 2");
  if (!(tol > 0.0)) throw ParameterError("tol must be positive");
  if (max_iter < 1) throw ParameterError("max-iter must be at least 1");
  if (!(realizer_tie_tol >= 0.0)) throw ParameterError("realizer tie tolerance must be nonnegative");
  if (fixed_iterations && *fixed_iterations < 1) throw ParameterError("iters must be at least 1");
}

namespace {

void check_compatible(const GridSpec& grid, const BranchSystem& sys, const Potential& potential) {
  if (grid.mode != sys.mode) throw ShapeError("grid and system use different domain modes");
  if (potential.mode != sys.mode) {
    throw ShapeError("potential '" + potential.name + "' is " + to_string(potential.mode) + " but the system is " +
                     to_string(sys.mode));
  }
  if (grid.support.lo != sys.working_interval.lo || grid.support.hi != sys.working_interval.hi) {
    throw ShapeError("grid support differs from the system's working interval");
  }
}

}  // namespace

BellmanOperator::BellmanOperator(const GridSpec& grid, const BranchSystem& sys, const Potential& potential,
                                 double tie_tol)
    : grid_(grid), tie_tol_(tie_tol), table_(sys.branches.size()) {
  check_compatible(grid, sys, potential);
  for (std::size_t j = 0; j < sys.branches.size(); ++j) {
    auto& column = table_[j];
    column.resize(std::size_t(grid.n));
    for (Eigen::Index i = 0; i < grid.n; ++i) {
      const double y = sys.branches[j].map(GridFunction::node(grid, i));
      Preimage& pre = column[std::size_t(i)];
      pre.admissible = potential.defined_at(y) && grid.support.contains(y, 1e-12 * grid.support.width());
      if (!pre.admissible) continue;
      pre.at = locate(grid, std::clamp(y, grid.support.lo, grid.support.hi));
      pre.potential = potential(y);
      if (!std::isfinite(pre.potential)) {
        throw NumericError("potential '" + potential.name + "' is not finite at " + std::to_string(y));
      }
    }
  }
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    bool any = false;
    for (const auto& column : table_) any = any || column[std::size_t(i)].admissible;
    if (!any) {
      throw CoverageError("no admissible branch at x = " + std::to_string(GridFunction::node(grid, i)));
    }
  }
}

BellmanResult BellmanOperator::apply(const GridFunction& f) const {
  if (!(f.spec() == grid_)) throw ShapeError("grid function does not match the operator grid");
  GridFunction::Values out(grid_.n);
  Realizer realizer(grid_.n);
  for (Eigen::Index i = 0; i < grid_.n; ++i) {
    double best = -std::numeric_limits<double>::infinity();
    int arg = -1;
    for (std::size_t j = 0; j < table_.size(); ++j) {
      const Preimage& pre = table_[j][std::size_t(i)];
      if (!pre.admissible) continue;
      const double v = pre.potential + eval(f, pre.at);
      if (arg < 0 || v > best + tie_tol_) {
        best = std::max(best, v);
        arg = int(j);
      } else {
        best = std::max(best, v);
      }
    }
    out[i] = best;
    realizer[i] = arg;
  }
  if (!out.allFinite()) throw NumericError("Bellman step produced a non-finite value");
  return {GridFunction(std::move(out), grid_.mode, grid_.support), std::move(realizer)};
}

HalfStepResult BellmanOperator::half_step(const GridFunction& f) const {
  BellmanResult b = apply(f);
  GridFunction::Values raw = 0.5 * (b.value.values() + f.values());
  const double shift = raw.maxCoeff();
  GridFunction::Values next = raw - shift;
  return {GridFunction(std::move(next), grid_.mode, grid_.support),
          GridFunction(std::move(raw), grid_.mode, grid_.support), std::move(b.realizer), shift};
}

BellmanResult bellman_max(const GridFunction& f, const BranchSystem& sys, const Potential& potential,
                          double tie_tol) {
  return BellmanOperator(f.spec(), sys, potential, tie_tol).apply(f);
}

HalfStepResult half_step(const GridFunction& f, const BranchSystem& sys, const Potential& potential,
                         double tie_tol) {
  return BellmanOperator(f.spec(), sys, potential, tie_tol).half_step(f);
}

SubactionResult solve(const BranchSystem& sys, const Potential& potential, const GridFunction& f0,
                      const SolverConfig& cfg) {
  cfg.validate();
  const BellmanOperator op(f0.spec(), sys, potential, cfg.realizer_tie_tol);
  const int steps = cfg.fixed_iterations.value_or(cfg.max_iter);

  GridFunction f = f0;
  double shift = 0.0, gap = std::numeric_limits<double>::infinity();
  int it = 0;
  bool converged = false;
  std::vector<double> gaps;
  while (it < steps) {
    HalfStepResult step = op.half_step(f);
    gap = sup_distance(step.next, f);
    if (!std::isfinite(gap)) throw NumericError("iteration diverged");
    gaps.push_back(gap);
    shift = step.shift;
    f = std::move(step.next);
    ++it;
    if (gap < cfg.tol) {
      converged = true;
      if (!cfg.fixed_iterations) break;
    } else {
      converged = false;
    }
  }

  BellmanResult bv = op.apply(f);
  const GridFunction::Values diff = bv.value.values() - f.values();
  const double m = 2.0 * shift;
  SubactionResult r{f,
                    m,
                    diff.mean(),
                    std::move(bv.realizer),
                    compute_R(f, m, sys, potential),
                    it,
                    diff.maxCoeff() - diff.minCoeff(),
                    gap,
                    converged,
                    std::move(gaps)};
  return r;
}

SubactionResult solve(const BranchSystem& sys, const Potential& potential, const SolverConfig& cfg) {
  cfg.validate();
  return solve(sys, potential, GridFunction::constant(sys.grid(cfg.n), 0.0), cfg);
}

GridFunction compute_R(const GridFunction& V, double m, const BranchSystem& sys, const Potential& potential) {
  const GridSpec grid = V.spec();
  check_compatible(grid, sys, potential);
  GridFunction::Values r(grid.n);
  if (sys.has_forward()) {
    for (Eigen::Index i = 0; i < grid.n; ++i) {
      const double x = V.node(i);
      r[i] = eval(V, sys.forward(x)) - V[i] - potential(x) + m;
    }
    return GridFunction(std::move(r), grid.mode, grid.support);
  }

  const Interval& w = sys.working_interval;
  const double slack = 1e-12 * w.width();
  const double unset = std::numeric_limits<double>::quiet_NaN();
  double largest = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    const double y = V.node(i);
    double best = unset;
    for (const Branch& br : sys.branches) {
      if (!br.inverse || !br.image.contains(y, slack)) continue;
      const double s = br.inverse(y);
      if (!w.contains(s, slack)) continue;
      const double v = eval(V, std::clamp(s, w.lo, w.hi)) - V[i] - potential(y) + m;
      best = std::isnan(best) ? v : std::min(best, v);
    }
    r[i] = best;
    if (!std::isnan(best)) largest = std::max(largest, best);
  }
  if (!std::isfinite(largest)) throw CoverageError("no grid point lies in a branch image of the working interval");
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    if (std::isnan(r[i])) r[i] = largest;
  }
  return GridFunction(std::move(r), grid.mode, grid.support);
}

std::vector<GridFunction> compute_R_branches(const GridFunction& V, double m, const BranchSystem& sys,
                                             const Potential& potential) {
  const GridSpec grid = V.spec();
  check_compatible(grid, sys, potential);
  const Interval& w = grid.support;
  std::vector<GridFunction> out;
  for (const Branch& br : sys.branches) {
    GridFunction::Values r(grid.n);
    for (Eigen::Index i = 0; i < grid.n; ++i) {
      const double y = br.map(V.node(i));
      if (!potential.defined_at(y) || !w.contains(y, 1e-12 * w.width())) {
        r[i] = std::numeric_limits<double>::infinity();
        continue;
      }
      r[i] = V[i] - eval(V, std::clamp(y, w.lo, w.hi)) - potential(y) + m;
    }
    // branches that leave the domain contribute nothing; keep the function finite
    const double finite_max = r.isFinite().any() ? r.unaryExpr([](double v) {
      return std::isfinite(v) ? v : -std::numeric_limits<double>::infinity();
    }).maxCoeff() : 0.0;
    r = r.unaryExpr([finite_max](double v) { return std::isfinite(v) ? v : finite_max; });
    out.emplace_back(std::move(r), grid.mode, grid.support);
  }
  return out;
}

std::vector<Interval> mather_support(const GridFunction& R, double threshold) {
  if (!(threshold > 0.0)) throw ParameterError("mather_support needs a positive threshold");
  std::vector<Interval> runs;
  Eigen::Index start = -1;
  for (Eigen::Index i = 0; i <= R.size(); ++i) {
    const bool low = i < R.size() && R[i] < threshold;
    if (low && start < 0) start = i;
    if (!low && start >= 0) {
      runs.push_back({R.node(start), R.node(i - 1)});
      start = -1;
    }
  }
  return runs;
}

double verify_subaction(const GridFunction& V, double m, const BranchSystem& sys, const Potential& potential) {
  const BellmanResult b = bellman_max(V, sys, potential, 0.0);
  return (b.value.values() - V.values() - m).abs().maxCoeff();
}

double verify_subaction(const RealMap& V, double m, const BranchSystem& sys, const Potential& potential,
                        std::span<const double> points) {
  double worst = 0.0;
  for (double x : points) {
    double best = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (const Branch& br : sys.branches) {
      const double y = br.map(x);
      if (!potential.defined_at(y)) continue;
      best = std::max(best, potential(y) + V(y));
      any = true;
    }
    if (!any) throw CoverageError("no admissible branch at x = " + std::to_string(x));
    worst = std::max(worst, std::abs(best - V(x) - m));
  }
  return worst;
}

GridFunction bump_initial(const GridSpec& grid, double epsilon, double a, double k) {
  if (!(a > 0.0 && a < 1.0)) throw ParameterError("bump centre must lie in (0,1)");
  if (!(epsilon > 0.0)) throw ParameterError("bump half-width must be positive");
  if (a - epsilon < 0.0 || a + epsilon > 1.0) throw ParameterError("bump support leaves [0,1]");
  return GridFunction::sample(grid, [=](double x) { return k * std::max(0.0, epsilon - std::abs(x - a)); });
}

}  // namespace ergodic
