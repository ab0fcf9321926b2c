#pragma once

/// Reproducibility contract: trial RNG is mt19937_64, per-trial seeds are
/// derived with splitmix64 from (base_seed, s, n, trial index), and bounded
/// draws use rejection sampling on raw engine output. None of this depends
/// on implementation-defined std::distribution behavior, so streams are
/// identical across standard libraries.

#include <cstdint>
#include <random>

namespace tropsand {

inline constexpr const char* kRngAlgorithm = "mt19937_64+splitmix64";

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Fixed mixing of sweep coordinates into a per-trial seed.
inline uint64_t mix_trial_seed(uint64_t base_seed, uint64_t s, uint64_t n, uint64_t trial) {
    uint64_t h = splitmix64(base_seed);
    h = splitmix64(h ^ (s * 0x9e3779b97f4a7c15ULL));
    h = splitmix64(h ^ (n * 0xc2b2ae3d27d4eb4fULL));
    h = splitmix64(h ^ (trial * 0x165667b19e3779f9ULL));
    return h;
}

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

} // namespace tropsand
