#pragma once

#include <cstdint>

namespace wfs {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen because the output stream is
// fully determined by the seed on every platform, unlike the standard
// library distributions whose results vary between implementations.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Uniform draw from {0, ..., bound-1} by rejection, so the result is unbiased
// and reproducible everywhere. bound must be nonzero.
inline std::uint64_t next_below(SplitMix64& gen, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = gen.next();
        if (r >= threshold) return r % bound;
    }
}

// Seed for the index-th item of a batch keyed by a master seed: the
// (index+1)-th output of a SplitMix64 stream started at the master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 gen(master);
    std::uint64_t value = 0;
    for (std::uint64_t i = 0; i <= index; ++i) value = gen.next();
    return value;
}

} // namespace wfs
