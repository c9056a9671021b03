#pragma once

#include <array>
#include <cstdint>

namespace srfr {

// Deterministic xoshiro256** generator.  The standard library engines are
// portable, but the distributions are not, so sampling helpers that must
// produce identical streams on every platform live here instead.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        // SplitMix64 expansion of the seed into the four words of state.
        uint64_t x = seed;
        for (auto& w : state_) w = splitmix64(x);
    }

    uint64_t next() {
        uint64_t* s = state_.data();
        const uint64_t result = rotl(s[1] * 5, 7) * 9;
        const uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    // Uniform draw from [0, bound) by rejection; bound must be nonzero.
    uint64_t below(uint64_t bound) {
        // Reject draws from the final partial copy of [0, bound) so every
        // residue keeps probability exactly 1/bound.
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    bool coin() { return next() >> 63; }

    // Independent stream keyed by (seed, a, b): used to give every
    // (scenario, trial) pair its own generator so trials can run in any
    // order, or concurrently, without changing the results.
    static Rng derive(uint64_t seed, uint64_t a, uint64_t b = 0) {
        uint64_t x = seed;
        uint64_t h = splitmix64(x);
        x ^= a + 0x9e3779b97f4a7c15ULL;
        h ^= splitmix64(x);
        x ^= b + 0x517cc1b727220a95ULL;
        h ^= splitmix64(x);
        return Rng(h);
    }

private:
    static uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    static uint64_t splitmix64(uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::array<uint64_t, 4> state_;
};

}  // namespace srfr
