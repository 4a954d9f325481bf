#ifndef POLYCERT_RNG_HPP
#define POLYCERT_RNG_HPP

#include <cstdint>

namespace polycert {

// Seeded 64-bit generator with the splitmix64 state transition:
//   state += 0x9e3779b97f4a7c15
//   z = state; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
// Fixed seeds reproduce identical streams on every platform.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Rejection-free modulo; bias is irrelevant for
    // the tiny bounds used here but keep bound < 2^32 anyway.
    uint64_t below(uint64_t bound) { return next() % bound; }

    // Uniform in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }
};

} // namespace polycert

#endif
