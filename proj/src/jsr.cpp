#include "ergodic/jsr.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "ergodic/potentials.hpp"

namespace ergodic {

double spectral_radius(const Matrix2& a) { return a.eigenvalues().cwiseAbs().maxCoeff(); }

JsrResult joint_spectral_radius(const Matrix2& a1, const Matrix2& a2, const SolverConfig& cfg, double t) {
  if (!(t > 0.0)) throw ParameterError("t must be positive");
  // branches are projective, so only the potential sees the scale t
  const BranchSystem sys = mobius_system(a1, a2);
  const Potential potential = matrix_potential(a1, a2, t);
  SubactionResult sub = solve(sys, potential, cfg);
  const double m = sub.m_estimate;
  JsrResult r{std::exp(m), m, std::move(sub), t, 0.0, {}};
  r.max_single_radius = std::max(spectral_radius(a1), spectral_radius(t * a2));
  if (!((a1.array() > 0.0).all() && (a2.array() > 0.0).all())) {
    r.note = "matrices are not strictly positive; e^m may differ from the joint spectral radius";
  }
  return r;
}

std::vector<ScanPoint> t_scan(const Matrix2& a1, const Matrix2& a2, const std::vector<double>& t_values,
                              const SolverConfig& cfg) {
  std::vector<ScanPoint> out;
  for (double t : t_values) {
    ScanPoint p{t, std::nullopt, {}};
    try {
      p.result = joint_spectral_radius(a1, a2, cfg, t);
    } catch (const Error& e) {
      p.error = e.what();
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<double> parse_range(const std::string& spec) {
  std::istringstream in(spec);
  double lo, hi, step;
  char c1, c2;
  if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof()) {
    throw ParameterError("range must be lo:hi:step, got '" + spec + "'");
  }
  if (!(step > 0.0) || hi < lo) throw ParameterError("range needs step > 0 and hi >= lo");
  std::vector<double> out;
  const long count = std::lround(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= count; ++i) out.push_back(lo + double(i) * step);
  return out;
}

}  // namespace ergodic
