#pragma once

#include "janus/params.hpp"

#include <cstdint>
#include <random>

namespace janus {

/// Uniform [0, 1) from the top 53 bits; identical on every platform.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

struct DrawRanges {
  double r_max = 1.5;
  double alpha_max = 2.0;
};

/// Two squeezed components with random weights, angles and a shared
/// displacement; normalized.
inline JanusSpec random_spec(std::mt19937_64& rng, const DrawRanges& ranges = {}) {
  JanusSpec s;
  s.chi = std::polar(uniform(rng, 0.2, 1.0), uniform(rng, 0.0, kTwoPi));
  s.eta = std::polar(uniform(rng, 0.2, 1.0), uniform(rng, 0.0, kTwoPi));
  s.xi = SqueezeParam(uniform(rng, 0.0, ranges.r_max), uniform(rng, 0.0, kTwoPi));
  s.zeta = SqueezeParam(uniform(rng, 0.0, ranges.r_max), uniform(rng, 0.0, kTwoPi));
  s.alpha = Displacement::from_polar(uniform(rng, 0.0, ranges.alpha_max), uniform(rng, 0.0, kTwoPi));
  return normalize_weights(s);
}

}  // namespace janus
