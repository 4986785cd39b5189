#pragma once

#include <cstdint>

namespace nung {

// Counter-based random numbers: the draw for (seed, index) is a pure
// function of the pair, so any particle's randomness can be evaluated in any
// order or thread and batches stay bit-identical.
inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t index) {
    // SplitMix64 finalizer over a Weyl-spaced counter.
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform double in the open interval (0, 1); the offset keeps draws away
// from 0, 1 and representable dyadic thresholds such as 1/2.
inline double uniform_open(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t bits = counter_hash(seed, index) >> 11;  // 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

// Derive an independent stream seed, for labeling experiment arms.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return counter_hash(seed ^ 0xA3C59AC2F1039E26ULL, stream);
}

}  // namespace nung
