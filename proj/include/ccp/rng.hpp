#pragma once

#include <random>

namespace ccp {

/// All stochasticity flows through explicitly seeded engines; distribution
/// objects are constructed locally at each draw site so no hidden state
/// survives between calls.
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double normal(Rng& rng) {
    return std::normal_distribution<double>(0.0, 1.0)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace ccp
