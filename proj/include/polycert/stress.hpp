#ifndef POLYCERT_STRESS_HPP
#define POLYCERT_STRESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polycert/criteria.hpp"

namespace polycert {

// One randomized HIP composition outcome: p = a c + b was HIP-certified over
// Q, then composed as p(h1(x), h2(y)) and handed to the one-sided mod-p
// oracle. The oracle either certifies irreducibility or stays inconclusive
// (reducible can never be concluded: the HIP certificate rules it out and the
// oracle is one-sided).
struct StressOutcome {
    std::string p;           // certified HIP polynomial
    std::string h1, h2;      // substitution pair
    std::string composed;
    bool irreducible;        // via irreducible_over_Q_via_modp
    uint64_t prime;          // certifying prime when irreducible
    std::vector<std::string> oracle_log; // per-prime notes (>= 2 retries)
};

struct StressReport {
    uint64_t seed;
    unsigned instances;
    unsigned compositions_per_instance;
    std::vector<StressOutcome> outcomes;
    unsigned irreducible_count = 0;
    unsigned inconclusive_count = 0;
};

// Deterministic for a fixed seed (SplitMix64). Each instance draws a over Q
// with at least two simple roots (deg <= 4), c with deg_y >= 1 and b meeting
// gcd(a, c_d b) = 1, certifies HIP, then composes with random nonconstant
// substitution pairs of degree <= 3 (biased low so most oracle scans fit the
// budget). Inconclusive outcomes carry the full per-prime retry log.
StressReport run_hip_stress(uint64_t seed, unsigned instances,
                            unsigned compositions_per_instance,
                            uint64_t budget = 50'000);

} // namespace polycert

#endif
