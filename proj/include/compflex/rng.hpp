#pragma once

#include <cstdint>

namespace compflex {

// SplitMix64 stream. Per-trial substreams are derived by hashing
// (master seed, trial index), so draws are independent of execution
// order and thread scheduling.
struct SplitMix64 {
    uint64_t state = 0;

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline SplitMix64 trial_stream(uint64_t seed, uint64_t trial) {
    return SplitMix64{mix64(seed ^ mix64(trial + 0x9E3779B97F4A7C15ULL))};
}

} // namespace compflex
