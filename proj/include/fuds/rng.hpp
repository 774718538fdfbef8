#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace fuds {

/// Engine-wide random source. Every stochastic operation in the library takes
/// a reference to one of these; runs seeded identically replay identically.
using Rng = std::mt19937_64;

/// Uniform draw from {0, 1, ..., n-1}. Requires n >= 1.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// Uniform draw from [0, 1).
inline double uniform_real(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

/// True with probability p. Requires p in [0, 1].
inline bool chance(Rng& rng, double p) {
    return std::bernoulli_distribution(p)(rng);
}

} // namespace fuds
