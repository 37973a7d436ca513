#include "ergodic/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "ergodic/analytic.hpp"
#include "ergodic/jsr.hpp"
#include "ergodic/orbits.hpp"
#include "ergodic/ruelle.hpp"

namespace ergodic::cli {

using nlohmann::json;

namespace {

Matrix2 matrix_from(const std::vector<double>& v, const char* flag) {
  if (v.size() != 4) throw ParameterError(std::string(flag) + " needs four comma-separated entries");
  return make_matrix2(v[0], v[1], v[2], v[3]);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ParameterError("cannot write " + path);
  return f;
}

void write_json(const std::string& path, const json& j) { open_out(path) << j.dump(2) << "\n"; }

GridFunction initial(const InitSpec& init, const GridSpec& grid) {
  if (!init.bump) return GridFunction::constant(grid, 0.0);
  return bump_initial(grid, init.epsilon, init.centre, init.slope);
}

json summary(const SubactionResult& r) {
  return {{"m_estimate", r.m_estimate}, {"m_mean", r.m_mean},   {"iterations", r.iterations},
          {"residual", r.residual},     {"last_gap", r.last_gap}, {"converged", r.converged}};
}

bool same_matrix(const std::vector<double>& p, std::size_t at, std::initializer_list<double> m) {
  std::size_t i = at;
  for (double v : m) {
    if (p[i++] != v) return false;
  }
  return true;
}

}  // namespace

InitSpec parse_init(const std::string& text) {
  if (text == "zero") return {};
  static const std::regex bump(R"(\s*bump\s*\(\s*([^,\s]+)\s*,\s*([^,\s]+)\s*(?:,\s*([^,\s\)]+)\s*)?\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, bump)) throw ParameterError("init must be 'zero' or 'bump(eps,a[,k])', got '" + text + "'");
  try {
    InitSpec s{true, std::stod(m[1]), std::stod(m[2]), m[3].matched ? std::stod(m[3]) : 1.0};
    return s;
  } catch (const std::exception&) {
    throw ParameterError("init: cannot parse numbers in '" + text + "'");
  }
}

BranchSystem system_for(const RunConfig& cfg, const Potential& potential) {
  std::string sys = cfg.system;
  if (sys == "auto") {
    if (potential.name == "log_farey" || potential.name == "neg_log_farey") {
      sys = "farey";
    } else if (potential.name == "matrix_pot") {
      sys = "mobius";
    } else {
      sys = "doubling";
    }
  }
  if (sys == "doubling") return doubling_system(potential.mode);
  if (sys == "farey") return farey_like_system();
  if (sys == "mobius") {
    if (potential.name == "matrix_pot") {
      const auto& p = cfg.params;
      return mobius_system(make_matrix2(p[0], p[1], p[2], p[3]), make_matrix2(p[4], p[5], p[6], p[7]));
    }
    return mobius_system(matrix_from(cfg.a1, "--a1"), matrix_from(cfg.a2, "--a2"));
  }
  throw ParameterError("system: unknown system '" + cfg.system + "'");
}

void write_subaction(const std::string& prefix, const SubactionResult& r, const std::string& potential) {
  auto csv = open_out(prefix + "_subaction.csv");
  csv << "x,V,realizer,R\n";
  for (Eigen::Index i = 0; i < r.V.size(); ++i) {
    csv << fmt(r.V.node(i)) << ',' << fmt(r.V[i]) << ',' << r.realizer[i] << ',' << fmt(r.R[i]) << '\n';
  }
  json j = summary(r);
  j["potential"] = potential;
  j["grid_n"] = r.V.size();
  write_json(prefix + "_subaction.json", j);
}

GridFunction reference_on_grid(const RunConfig& cfg, const Potential& potential, const GridSpec& grid) {
  const std::string& name = potential.name;
  const int n = cfg.n_terms;
  GridFunction ref = [&]() -> GridFunction {
    if (name == "quadratic_third") return GridFunction::sample(grid, [](double x) { return quadratic_exact(x).value; });
    if (name == "sin_sq") return GridFunction::sample(grid, [n](double x) { return sinsq_series(x, n).value; });
    if (name == "sin") return GridFunction::sample(grid, [n](double x) { return sin_series(x, n).value; });
    if (name == "log_farey") return GridFunction::sample(grid, farey_exact);
    if (name == "self_subaction") return GridFunction::sample(grid, [&](double x) { return potential(x); });
    if (name == "matrix_pot") {
      const auto& p = cfg.params;
      if (same_matrix(p, 0, {2, 1, 2, 2}) && same_matrix(p, 4, {2, 2, 1, 2})) {
        const double t = p.size() == 9 ? p[8] : 1.0;
        if (t == 1.0) return GridFunction::sample(grid, jsr_exact_example1);
        return GridFunction::sample(grid, [t](double x) { return jsr_exact_parametric(x, t).value; });
      }
      if (same_matrix(p, 0, {2, 1, 2, 2}) && same_matrix(p, 4, {1, 1, 0.5, 1}) && p.size() == 8) {
        return GridFunction::sample(grid, [](double x) { return jsr_exact_parametric(x, 0.5).value; });
      }
    }
    throw CatalogError("no analytic reference for potential '" + name + "'");
  }();
  return sup_normalize(ref).first;
}

int run_solve(const RunConfig& cfg, std::ostream& out) {
  const Potential potential = catalog(cfg.potential, cfg.params);
  const BranchSystem sys = system_for(cfg, potential);
  if (cfg.init.size() != 1) throw ParameterError("init: solve takes a single initial condition");
  const GridSpec grid = sys.grid(cfg.solver.n);
  const SubactionResult r = solve(sys, potential, initial(parse_init(cfg.init.front()), grid), cfg.solver);
  write_subaction(cfg.out, r, potential.name);
  out << summary(r).dump() << "\n";
  return r.converged ? kOk : kNotConverged;
}

int run_compare(const RunConfig& cfg, std::ostream& out) {
  const Potential potential = catalog(cfg.potential, cfg.params);
  const BranchSystem sys = system_for(cfg, potential);
  const GridSpec grid = sys.grid(cfg.solver.n);
  const GridFunction exact = reference_on_grid(cfg, potential, grid);
  const SubactionResult r = solve(sys, potential, initial(parse_init(cfg.init.front()), grid), cfg.solver);
  const GridFunction numeric = sup_normalize(r.V).first;
  const double diff = sup_distance(numeric, exact);

  auto csv = open_out(cfg.out + "_compare.csv");
  csv << "x,V_numeric,V_exact,diff\n";
  for (Eigen::Index i = 0; i < grid.n; ++i) {
    csv << fmt(numeric.node(i)) << ',' << fmt(numeric[i]) << ',' << fmt(exact[i]) << ','
        << fmt(numeric[i] - exact[i]) << '\n';
  }
  json j = summary(r);
  j["sup_diff"] = diff;
  j["bound"] = cfg.bound;
  write_json(cfg.out + "_compare.json", j);
  out << j.dump() << "\n";
  return diff <= cfg.bound ? kOk : kError;
}

int run_spectrum(const RunConfig& cfg, std::ostream& out) {
  const Potential potential = catalog(cfg.potential, cfg.params);
  const BranchSystem sys = system_for(cfg, potential);
  const RuelleResult r = eigen_solve(sys, potential, cfg.solver);
  const GridFunction phi(r.h.values().exp(), r.h.mode(), r.h.support());
  const GridFunction lphi = ruelle_apply(phi, sys, potential);

  auto csv = open_out(cfg.out + "_spectrum.csv");
  csv << "x,h,phi,ratio\n";
  for (Eigen::Index i = 0; i < phi.size(); ++i) {
    csv << fmt(phi.node(i)) << ',' << fmt(r.h[i]) << ',' << fmt(phi[i]) << ',' << fmt(lphi[i] / (r.lambda * phi[i]))
        << '\n';
  }
  json j{{"lambda", r.lambda},   {"lambda_median", r.lambda_median}, {"residual", r.residual},
         {"iterations", r.iterations}, {"converged", r.converged}};
  write_json(cfg.out + "_spectrum.json", j);
  out << j.dump() << "\n";
  return r.converged ? kOk : kNotConverged;
}

int run_jsr(const RunConfig& cfg, std::ostream& out) {
  const Matrix2 a1 = matrix_from(cfg.a1, "--a1"), a2 = matrix_from(cfg.a2, "--a2");
  if (cfg.t_scan.empty()) {
    const JsrResult r = joint_spectral_radius(a1, a2, cfg.solver);
    write_subaction(cfg.out, r.subaction, "matrix_pot");
    json j = summary(r.subaction);
    j["rho"] = r.rho;
    j["m"] = r.m;
    j["max_single_radius"] = r.max_single_radius;
    if (!r.note.empty()) j["note"] = r.note;
    write_json(cfg.out + "_jsr.json", j);
    out << j.dump() << "\n";
    return r.subaction.converged ? kOk : kNotConverged;
  }
  const auto scan = t_scan(a1, a2, parse_range(cfg.t_scan), cfg.solver);
  auto csv = open_out(cfg.out + "_jsr_scan.csv");
  csv << "t,m,rho,residual,converged\n";
  bool all = true;
  for (const ScanPoint& p : scan) {
    if (!p.result) {
      std::cerr << "t = " << p.t << ": " << p.error << "\n";
      all = false;
      continue;
    }
    const auto& r = *p.result;
    csv << fmt(p.t) << ',' << fmt(r.m) << ',' << fmt(r.rho) << ',' << fmt(r.subaction.residual) << ','
        << (r.subaction.converged ? 1 : 0) << '\n';
    all = all && r.subaction.converged;
  }
  out << json{{"points", scan.size()}, {"all_converged", all}}.dump() << "\n";
  return all ? kOk : kNotConverged;
}

int run_oracle(const RunConfig& cfg, std::ostream& out) {
  const Potential potential = catalog(cfg.potential, cfg.params);
  const BranchSystem sys = system_for(cfg, potential);
  const OrbitCertificate c = best_periodic_value(potential, sys, cfg.p_max);
  const json j{{"period", c.period}, {"points", c.points}, {"word", c.word}, {"average", c.birkhoff_average}};
  write_json(cfg.out + "_oracle.json", j);
  out << j.dump() << "\n";
  return kOk;
}

int run_basins(const RunConfig& cfg, std::ostream& out) {
  const Potential potential = catalog(cfg.potential, cfg.params);
  const BranchSystem sys = system_for(cfg, potential);
  const GridSpec grid = sys.grid(cfg.solver.n);
  std::vector<SubactionResult> runs;
  bool all = true;
  for (std::size_t k = 0; k < cfg.init.size(); ++k) {
    runs.push_back(solve(sys, potential, initial(parse_init(cfg.init[k]), grid), cfg.solver));
    write_subaction(cfg.out + "_basin" + std::to_string(k), runs.back(), potential.name);
    all = all && runs.back().converged;
  }
  const double threshold = 10.0 * cfg.solver.tol;
  json dist = json::array(), distinct = json::array();
  for (std::size_t a = 0; a < runs.size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < runs.size(); ++b) {
      const double d = sup_distance(runs[a].V, runs[b].V);
      row.push_back(d);
      if (a < b && d > threshold) distinct.push_back({a, b});
    }
    dist.push_back(row);
  }
  const json j{{"init", cfg.init}, {"distances", dist}, {"distinct_pairs", distinct}, {"threshold", threshold},
               {"all_converged", all}};
  write_json(cfg.out + "_basins.json", j);
  out << j.dump() << "\n";
  return all ? kOk : kNotConverged;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Calibrated subactions, maximal ergodic values and transfer-operator spectra"};
  app.set_config("--config", "", "key=value file with any of the long options");
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> iters;
  app.add_option("--potential", cfg.potential, "catalog name");
  app.add_option("--params", cfg.params, "potential parameters")->delimiter(',');
  app.add_option("--system", cfg.system, "auto, doubling, farey or mobius");
  app.add_option("--grid-n", cfg.solver.n, "grid resolution");
  app.add_option("--tol", cfg.solver.tol, "stop when successive iterates differ by less than this");
  app.add_option("--max-iter", cfg.solver.max_iter, "iteration cap");
  app.add_option("--iters", iters, "run exactly this many iterations");
  app.add_option("--init", cfg.init, "zero or bump(eps,a[,k]); basins accepts several")->delimiter(';');
  app.add_option("--out", cfg.out, "output path prefix");
  app.add_option("--a1", cfg.a1, "first matrix, row-major")->delimiter(',');
  app.add_option("--a2", cfg.a2, "second matrix, row-major")->delimiter(',');
  app.add_option("--t-scan", cfg.t_scan, "lo:hi:step");
  app.add_option("--p-max", cfg.p_max, "longest period searched by the oracle");
  app.add_option("--bound", cfg.bound, "compare passes when sup_diff <= bound");
  app.add_option("--n-terms", cfg.n_terms, "series truncation for compare");

  for (const char* name : {"solve", "compare", "spectrum", "jsr", "oracle", "basins"}) {
    app.add_subcommand(name)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version requests are successful exits
    return app.exit(e, out, err) == 0 ? kOk : kError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (iters) cfg.solver.fixed_iterations = *iters;

  try {
    cfg.solver.validate();
    if (cfg.command == "solve") return run_solve(cfg, out);
    if (cfg.command == "compare") return run_compare(cfg, out);
    if (cfg.command == "spectrum") return run_spectrum(cfg, out);
    if (cfg.command == "jsr") return run_jsr(cfg, out);
    if (cfg.command == "oracle") return run_oracle(cfg, out);
    return run_basins(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace ergodic::cli
