#pragma once

#include <vector>

#include "ergodic/potentials.hpp"
#include "ergodic/systems.hpp"

namespace ergodic {

/// A periodic orbit and its Birkhoff average; a lower bound for m(A).
struct OrbitCertificate {
  int period = 0;
  /// points[k] = tau_{word[k]}(points[k+1]), indices cyclic; for a forward map T(points[k]) = points[k+1].
  std::vector<double> points;
  std::vector<int> word;
  double birkhoff_average = 0.0;
};

/// One representative per doubling orbit whose period divides p, built from the exact
/// rationals k/(2^p - 1). The point counts sum to 2^p - 1. Averages are left at zero.
std::vector<OrbitCertificate> doubling_orbits(int p);

/// Primitive binary words of length p up to rotation (Lyndon words), as branch index lists.
std::vector<std::vector<int>> primitive_words(int p);

/// Periodic orbit of the word under the system's Mobius branches, from the closed-form
/// fixed point of the composed map. Returns an empty certificate if the word has no
/// non-repelling fixed point in the working interval.
OrbitCertificate word_orbit(const BranchSystem& sys, const std::vector<int>& word);

/// Best Birkhoff average over all periodic orbits of period <= p_max. Orbits through
/// points where the potential is undefined are skipped.
OrbitCertificate best_periodic_value(const Potential& potential, const BranchSystem& sys, int p_max = 8);

}  // namespace ergodic
