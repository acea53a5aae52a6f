#pragma once

#include <cstdint>
#include <random>

namespace specdist {

/// All randomized library code draws from a seeded mt19937_64 through the
/// helpers below, never through std:: distributions, whose output is
/// implementation-defined. Identical seeds therefore give identical results
/// on any platform.
using Rng = std::mt19937_64;

/// SplitMix64 step (Steele, Lea, Flood 2014). Used both as a seed scrambler
/// and as the trajectory seed-splitting rule.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// The i-th derived seed is the i-th output of the SplitMix64 stream started
/// at the master seed. Trajectory k of a batch is seeded with derive_seed(m, k)
/// so each trajectory is reproducible in isolation.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t state = master;
    std::uint64_t out = 0;
    for (std::uint64_t i = 0; i <= index; ++i) out = splitmix64(state);
    return out;
}

/// Uniform integer in [0, n) by rejection; unbiased for any n > 0.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) { return uniform_unit(rng) < p; }

}  // namespace specdist
