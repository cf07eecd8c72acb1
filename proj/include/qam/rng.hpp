#pragma once

#include <cstdint>

namespace qam {

// SplitMix64. Used everywhere a reproducible stream is needed; unlike the
// standard distributions its output is bit-identical across platforms, and
// seeding a fresh stream per work item keeps parallel loops order-free.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double next_in(double lo, double hi) { return lo + next_double() * (hi - lo); }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }
};

/// Derives an independent stream for work item `index` of a seeded task.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    mix.next_u64();
    return mix;
}

inline constexpr std::uint64_t kDefaultSeed = 0x51a1e5ULL;

}  // namespace qam
