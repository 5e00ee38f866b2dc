#pragma once

#include <cstdint>

namespace tracecodes {

// SplitMix64: tiny, fast, well-mixed 64-bit generator.  Chosen over
// std::mt19937_64 because its entire state is the published seed, which makes
// share deals reproducible from a single integer across platforms and
// standard-library implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound) by rejection sampling; bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~0ull / bound);
        for (;;) {
            std::uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace tracecodes
