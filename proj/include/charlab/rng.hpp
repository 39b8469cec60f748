#pragma once

#include <cstdint>

namespace charlab {

// splitmix64: the documented generator for everything seeded in this project.
// All sampling is built on raw 64-bit draws so results are identical across
// platforms and standard-library implementations.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Stable per-instance seed derivation for sweeps: mixes a base seed with a
// check name and instance index.
inline std::uint64_t derive_seed(std::uint64_t base, const char* tag, std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (const char* c = tag; *c; ++c) {
        h ^= static_cast<unsigned char>(*c);
        h *= 0x100000001b3ULL;
    }
    SplitMix64 mix(base ^ h ^ (index * 0x9e3779b97f4a7c15ULL));
    return mix.next();
}

} // namespace charlab
