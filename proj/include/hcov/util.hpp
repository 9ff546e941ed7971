#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

namespace hcov {

// splitmix64: the shared bit source for every randomized routine, so that
// seeds reproduce across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // word(seed, i): the i-th stream word without stepping through the
    // previous ones (the state advances by a fixed constant).
    static std::uint64_t word(std::uint64_t seed, std::uint64_t i) {
        SplitMix64 g(seed + i * 0x9E3779B97F4A7C15ULL);
        return g.next();
    }

    // uniform integer in [0, n) by rejection
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }
};

// All numeric text output uses 9 decimal places.
inline std::string fixed9(double v) {
    if (v > -5e-10 && v < 0.0) v = 0.0;  // avoid "-0.000000000"
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

}  // namespace hcov
