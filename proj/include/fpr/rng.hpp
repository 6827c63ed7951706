#pragma once

// Counter-based random source: draw i of a seeded stream is a pure function
// of (seed, i), so simulations can hand out experiment indices to any number
// of workers in any order and still produce identical results. The output
// function is the SplitMix64 finalizer over a Weyl sequence (Steele, Lea
// and Flood's splittable generator, evaluated at an arbitrary counter).

#include <cstdint>

namespace fpr::rng {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// index-th 64-bit output of the stream keyed by seed.
constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * kGoldenGamma);
}

// Uniform draw in the open interval (0, 1): 53 high bits, offset by half an
// ulp so 0 and 1 are unreachable and inverse-cdf sampling stays finite.
inline double uniform_open(std::uint64_t seed, std::uint64_t index) {
    return (static_cast<double>(at(seed, index) >> 11) + 0.5) * 0x1p-53;
}

}  // namespace fpr::rng
