#pragma once

#include <cstdint>

namespace cws {

// Deterministic PRNG used everywhere randomness is needed.  splitmix64 is
// used directly (rather than std::mt19937 + std:: distributions) so that a
// given seed reproduces the same stream on every platform and standard
// library; the std:: distribution algorithms are implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, bound).  Lemire's multiply-shift rejection
    // method: unbiased and branch-light.  bound must be nonzero.
    uint64_t below(uint64_t bound) {
        while (true) {
            uint64_t x = next();
            __uint128_t m = (__uint128_t)x * bound;
            uint64_t lo = (uint64_t)m;
            if (lo < bound) {
                uint64_t threshold = -bound % bound;
                if (lo < threshold) continue;
            }
            return (uint64_t)(m >> 64);
        }
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double real01() { return (next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return real01() < p; }

private:
    uint64_t state_;
};

// Derives a stream seed for a work item (PLS attempt, GA instance, search
// task) from a master seed.  One splitmix64 round over a combined word keeps
// sibling streams statistically independent of each other and of the master
// stream itself.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    uint64_t z = master ^ (0x9e3779b97f4a7c15ull * (index + 1));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace cws
