#pragma once

#include <finsler3/geometry.hpp>

#include <cstdint>
#include <random>

// Shared helpers for the test suites. All randomness is seeded so failures
// reproduce exactly.

namespace testsupport {

using finsler3::Mat3;
using finsler3::Vec3;

inline std::mt19937_64 make_rng(std::uint64_t seed = 20240901ull) {
  return std::mt19937_64(seed);
}

// Uniform double in [lo, hi) from the top 53 bits; avoids distribution
// implementation differences.
inline double urand(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

inline Vec3 rand_vec(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  return Vec3(urand(rng, lo, hi), urand(rng, lo, hi), urand(rng, lo, hi));
}

// Random symmetric positive definite matrix, eigenvalues bounded away from 0.
inline Mat3 rand_spd(std::mt19937_64& rng, double ridge = 0.3) {
  Mat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = urand(rng);
  return a.transpose() * a + ridge * Mat3::Identity();
}

inline Vec3 rand_unit(std::mt19937_64& rng) {
  for (;;) {
    Vec3 v = rand_vec(rng);
    const double n = v.norm();
    if (n > 0.1 && n < 1.0) return v / n;
  }
}

}  // namespace testsupport
