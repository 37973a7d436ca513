#include "ergodic/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>

namespace ergodic {

namespace {

void check_period(int p, int limit) {
  if (p < 1 || p > limit) {
    throw ParameterError("period must lie in [1, " + std::to_string(limit) + "], got " + std::to_string(p));
  }
}

bool average_over(const Potential& potential, OrbitCertificate& c) {
  double sum = 0.0;
  for (double x : c.points) {
    if (!potential.defined_at(x)) return false;
    sum += potential(x);
  }
  c.birkhoff_average = sum / double(c.points.size());
  return std::isfinite(c.birkhoff_average);
}

// Root of r x^2 + (s - p) x - q = 0 in the interval with the smallest |derivative|.
std::optional<double> mobius_fixed_point(const MobiusCoefficients& c, const Interval& w) {
  const double p = c(0, 0), q = c(0, 1), r = c(1, 0), s = c(1, 1);
  std::vector<double> roots;
  if (std::abs(r) < 1e-300) {
    if (s != p) roots.push_back(q / (s - p));
  } else {
    const double b = s - p;
    const double disc = b * b + 4.0 * r * q;
    if (disc < 0.0) return std::nullopt;
    const double sq = std::sqrt(disc);
    // stable quadratic formula
    const double k = -0.5 * (b + std::copysign(sq, b));
    if (k != 0.0) roots.push_back(k / r);
    if (k != 0.0) roots.push_back(-q / k);
    if (k == 0.0) roots.push_back(0.0);
  }
  std::optional<double> best;
  double best_slope = std::numeric_limits<double>::infinity();
  for (double x : roots) {
    if (!w.contains(x, 1e-12)) continue;
    const double slope = std::abs(mobius_derivative(c, x));
    if (slope < best_slope) {
      best_slope = slope;
      best = std::clamp(x, w.lo, w.hi);
    }
  }
  if (!best || best_slope > 1.0 + 1e-9) return std::nullopt;
  return best;
}

}  // namespace

std::vector<OrbitCertificate> doubling_orbits(int p) {
  check_period(p, 20);
  const std::uint64_t den = (std::uint64_t{1} << p) - 1;
  std::vector<char> seen(den, 0);
  std::vector<OrbitCertificate> out;
  for (std::uint64_t k = 0; k < den; ++k) {
    if (seen[k]) continue;
    OrbitCertificate c;
    std::uint64_t j = k;
    do {
      seen[j] = 1;
      c.points.push_back(double(j) / double(den));
      c.word.push_back(2 * j >= den ? 1 : 0);
      j = (2 * j) % den;
    } while (j != k);
    c.period = int(c.points.size());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<int>> primitive_words(int p) {
  check_period(p, 20);
  std::vector<std::vector<int>> out;
  for (std::uint32_t bits = 0; bits < (1u << p); ++bits) {
    bool lyndon = true;
    for (int r = 1; r < p && lyndon; ++r) {
      const std::uint32_t rot = ((bits << r) | (bits >> (p - r))) & ((1u << p) - 1);
      lyndon = bits < rot;
    }
    if (!lyndon) continue;
    std::vector<int> w(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) w[std::size_t(i)] = int((bits >> (p - 1 - i)) & 1u);
    out.push_back(std::move(w));
  }
  return out;
}

OrbitCertificate word_orbit(const BranchSystem& sys, const std::vector<int>& word) {
  MobiusCoefficients comp = MobiusCoefficients::Identity();
  for (int j : word) {
    const Branch& br = sys.branches.at(std::size_t(j));
    if (!br.mobius) throw ConstructionError("word orbits need Mobius branches");
    comp = comp * *br.mobius;
  }
  const auto x0 = mobius_fixed_point(comp, sys.working_interval);
  if (!x0) return {};
  OrbitCertificate c;
  c.period = int(word.size());
  c.word = word;
  c.points.resize(word.size());
  // points[k] = tau_{w_k} o ... o tau_{w_{p-1}}(x0), so points[0] = x0 and points[p] wraps to x0
  double x = *x0;
  c.points[0] = x;
  for (std::size_t k = word.size() - 1; k >= 1; --k) {
    x = sys.branches[std::size_t(word[k])].map(x);
    c.points[k] = x;
  }
  return c;
}

OrbitCertificate best_periodic_value(const Potential& potential, const BranchSystem& sys, int p_max) {
  check_period(p_max, 20);
  OrbitCertificate best;
  best.birkhoff_average = -std::numeric_limits<double>::infinity();
  auto consider = [&](OrbitCertificate c) {
    if (c.points.empty() || !average_over(potential, c)) return;
    if (c.birkhoff_average > best.birkhoff_average + 1e-15) best = std::move(c);
  };

  if (sys.kind == SystemKind::doubling) {
    for (int p = 1; p <= p_max; ++p) {
      for (auto& c : doubling_orbits(p)) {
        if (c.period == p) consider(std::move(c));
      }
    }
    if (sys.mode == DomainMode::interval) consider(OrbitCertificate{1, {1.0}, {1}, 0.0});
  } else {
    for (int p = 1; p <= p_max; ++p) {
      for (const auto& w : primitive_words(p)) {
        OrbitCertificate c = word_orbit(sys, w);
        if (c.points.empty()) {
          std::clog << "orbit oracle: word of length " << p << " has no attracting fixed point, skipped\n";
          continue;
        }
        consider(std::move(c));
      }
    }
  }
  if (best.points.empty()) throw CoverageError("no periodic orbit lies in the potential's domain");
  return best;
}

}  // namespace ergodic
