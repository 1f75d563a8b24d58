#pragma once
#include <cstdint>
#include <random>

#include "gslab/vec.hpp"

namespace gslab::num {

// Stable per-trial stream derivation (splitmix64 of seed + trial index), so
// trial k draws the same vectors regardless of how many trials run or in
// which order results are reduced.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform point on the unit sphere of R^dim: normalized Gaussian vector.
inline Vec random_unit_vector(int dim, std::mt19937_64& gen) {
  std::normal_distribution<double> dist;
  Vec v(dim);
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& x : v) {
      x = dist(gen);
      n2 += x * x;
    }
  } while (n2 < 1e-24);
  double inv = 1.0 / std::sqrt(n2);
  for (double& x : v) x *= inv;
  return v;
}

}  // namespace gslab::num
