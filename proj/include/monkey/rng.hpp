#pragma once

#include <cstdint>

namespace monkey {

// SplitMix64: golden-ratio increment, Stafford mix13 finalizer. One instance
// per trial, each seeded through mix64 of (seed, stream index), so the trial
// schedule never touches the streams and results are reproducible under any
// worker count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    static std::uint64_t mix64(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ull)));
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    // Unbiased integer in [0, bound) by Lemire multiply-shift with rejection.
    std::uint32_t next_below(std::uint32_t bound) {
        std::uint64_t x = next() & 0xFFFFFFFFull;
        std::uint64_t m = x * bound;
        auto lo = static_cast<std::uint32_t>(m);
        if (lo < bound) {
            std::uint32_t t = (0u - bound) % bound;
            while (lo < t) {
                x = next() & 0xFFFFFFFFull;
                m = x * bound;
                lo = static_cast<std::uint32_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 32);
    }

    // Uniform in [0, 1) with 53 random mantissa bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

} // namespace monkey
