#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ergodic/potentials.hpp"
#include "ergodic/solver.hpp"
#include "ergodic/systems.hpp"

namespace ergodic::cli {

enum ExitCode { kOk = 0, kError = 1, kNotConverged = 2 };

/// Initial condition for the averaged iteration.
struct InitSpec {
  bool bump = false;
  double epsilon = 0.0, centre = 0.0, slope = 1.0;
};

/// "zero" or "bump(eps,a[,k])".
InitSpec parse_init(const std::string& text);

struct RunConfig {
  std::string command;
  std::string potential = "sin_sq";
  std::vector<double> params;
  std::string system = "auto";  // auto | doubling | farey | mobius
  SolverConfig solver;
  std::string out = "ergopt";
  std::vector<std::string> init{"zero"};
  std::vector<double> a1{2, 1, 2, 2};
  std::vector<double> a2{2, 2, 1, 2};
  std::string t_scan;
  int p_max = 8;
  double bound = 1e-2;
  int n_terms = 30;
};

/// System the potential is meant to run on, honouring cfg.system when it is not "auto".
BranchSystem system_for(const RunConfig& cfg, const Potential& potential);

/// Writes x, V, realizer, R and a JSON sidecar with the scalar diagnostics.
void write_subaction(const std::string& prefix, const SubactionResult& r, const std::string& potential);

/// Sup-normalized reference subaction for the named potential, sampled on the grid.
/// Throws CatalogError when no closed form or series is available.
GridFunction reference_on_grid(const RunConfig& cfg, const Potential& potential, const GridSpec& grid);

int run_solve(const RunConfig& cfg, std::ostream& out);
int run_compare(const RunConfig& cfg, std::ostream& out);
int run_spectrum(const RunConfig& cfg, std::ostream& out);
int run_jsr(const RunConfig& cfg, std::ostream& out);
int run_oracle(const RunConfig& cfg, std::ostream& out);
int run_basins(const RunConfig& cfg, std::ostream& out);

/// Parses arguments (and an optional --config file) and dispatches. Errors are reported on
/// `err` and mapped to exit code 1.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ergodic::cli
