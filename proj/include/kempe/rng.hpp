#pragma once

#include <cstdint>

namespace kempe {

// splitmix64, fixed-increment form.
//
// Based on code written in 2015 by Sebastiano Vigna (vigna@acm.org) and
// dedicated to the public domain (CC0). See
// http://creativecommons.org/publicdomain/zero/1.0/ and
// http://dx.doi.org/10.1145/2714064.2660195.
//
// One instance per chain; parallel chains get independent streams via
// split(), never by sharing a generator.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += UINT64_C(0x9E3779B97F4A7C15));
        z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
        return z ^ (z >> 31);
    }

    // Child stream. The extra mixing constant keeps parent and child
    // sequences unrelated even when split() is called repeatedly.
    SplitMix64 split() {
        uint64_t s = next() ^ UINT64_C(0x6C62272E07BB0142);
        return SplitMix64(s);
    }

    // Uniform in [0, n), unbiased via rejection. n must be positive.
    uint64_t below(uint64_t n) {
        uint64_t threshold = (0 - n) % n; // 2^64 mod n
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

private:
    uint64_t state_;
};

} // namespace kempe
