#pragma once

#include <cmath>
#include <cstdint>

namespace lat {

// Deterministic simulation RNG: xoshiro256++ seeded through SplitMix64.
// Reference vectors are frozen in test_rng.cpp against an independent
// implementation (tests/rng_reference.py).

class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : x_(seed) {}

    uint64_t next() {
        x_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = x_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    uint64_t x_;
};

class Rng {
public:
    explicit Rng(uint64_t seed) {
        SplitMix64 sm(seed);
        for (uint64_t& w : s_) w = sm.next();
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9E3779B97F4A7C15ULL;
    }

    // Independent substream for a numbered trial under one master seed.
    static Rng stream(uint64_t seed, uint64_t trial) {
        SplitMix64 sm(seed);
        uint64_t a = sm.next();
        uint64_t b = sm.next();
        return Rng(a ^ (b + trial * 0x9E3779B97F4A7C15ULL));
    }

    uint64_t next() {
        uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on (0,1]: 53-bit mantissa, never zero so log() is safe.
    double uniform01() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    double exponential(double mean) { return -mean * std::log(uniform01()); }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
};

}  // namespace lat
