#pragma once

#include <random>
#include <string>

#include "ergodic/potentials.hpp"
#include "ergodic/systems.hpp"

namespace test_support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240917);
  return gen;
}

inline double uniform(double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

/// The system each catalog potential is studied on.
inline ergodic::BranchSystem system_for(const ergodic::Potential& p) {
  if (p.name == "log_farey" || p.name == "neg_log_farey") return ergodic::farey_like_system();
  return ergodic::doubling_system(p.mode);
}

inline ergodic::Matrix2 example_a1() { return ergodic::make_matrix2(2, 1, 2, 2); }
inline ergodic::Matrix2 example_a2() { return ergodic::make_matrix2(2, 2, 1, 2); }
inline ergodic::Matrix2 second_example_a2() { return ergodic::make_matrix2(1, 1, 0.5, 1); }

}  // namespace test_support
