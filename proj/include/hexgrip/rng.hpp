#pragma once

#include <random>

namespace hexgrip {

// One engine per episode, consumed in tick order; this is what makes runs
// reproducible for a given seed.
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double gaussian(Rng& rng, double mean, double sd) {
  if (sd <= 0.0) return mean;
  return std::normal_distribution<double>(mean, sd)(rng);
}

}  // namespace hexgrip
