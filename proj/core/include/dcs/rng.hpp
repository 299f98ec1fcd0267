#ifndef DCS_RNG_HPP
#define DCS_RNG_HPP

#include <cstdint>

namespace dcs {

// SplitMix64 (Steele/Lea/Flood). The algorithm is pinned so that seeded
// streams are byte-identical across platforms and compilers; std::
// distributions are not portable and must not be used on top of it.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, n) via the multiply-shift reduction; n > 0.
    // The tiny modulo bias is irrelevant here, determinism is not.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Uniform draw in [lo, hi], inclusive.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());  // full 2^64 range
        return lo + static_cast<std::int64_t>(next_below(span));
    }
};

}  // namespace dcs

#endif
