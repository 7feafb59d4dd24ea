#ifndef FLEXICOLOR_RANDOM_HPP
#define FLEXICOLOR_RANDOM_HPP

#include <cstdint>

namespace flexicolor {

// Deterministic pseudo-random stream (splitmix64).  The generator algorithm
// is fixed here, independent of the standard library, so identical seeds
// produce identical colorings on every platform.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound) via 128-bit multiply-shift.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    bool coin() { return (next() >> 63) != 0; }

    // Uniform double in [0,1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    static std::uint64_t mix(std::uint64_t x) {
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    // Decorrelated substream: trial i of a seeded experiment uses
    // derived(seed, i) so trials can run in any order (or in parallel)
    // with a deterministic aggregate.
    static RandomSource derived(std::uint64_t seed, std::uint64_t stream) {
        return RandomSource(mix(seed + 0x9E3779B97F4A7C15ULL * (stream + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace flexicolor

#endif
