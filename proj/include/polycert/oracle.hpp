#ifndef POLYCERT_ORACLE_HPP
#define POLYCERT_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polycert/multipoly.hpp"

namespace polycert {

inline constexpr uint64_t kDefaultOracleBudget = 10'000'000;

// Complete factorization over a finite field by exhaustive divisor search.
// Irreducibility of each factor is exact within the searched caps (every
// candidate divisor up to half the total degree was tested).
struct FactorizationResult {
    MultiPoly input;
    FieldPtr field;
    FieldElement unit;
    // Monic irreducible factors in canonical order with multiplicities;
    // unit * prod factors^mult == input.
    std::vector<std::pair<MultiPoly, unsigned>> factors;
    // Caps actually searched: per-variable degree caps and the total-degree
    // cap on candidate divisors, plus the number of candidates tested.
    std::map<std::string, int> var_caps;
    int total_degree_cap = 0;
    uint64_t candidates_tested = 0;

    bool irreducible() const {
        return factors.size() == 1 && factors[0].second == 1;
    }
    MultiPoly reassemble() const;
};

// Enumerates monic candidate divisors G (graded-lex order, per-variable
// degree caps from F, 1 <= totdeg G <= totdeg F / 2), tests exact
// divisibility, recurses on cofactors. Throws BudgetExceeded with the exact
// candidate count a full scan requires when it exceeds the budget;
// UnsupportedDomain over Q.
FactorizationResult factor_exhaustive(const MultiPoly& F,
                                      uint64_t budget = kDefaultOracleBudget);

// Desk-scale proxy for absolute irreducibility: verdicts over F_{p^k} for
// k = 1..k_max. EVIDENCE only, never a certificate.
struct EvidenceEntry {
    unsigned k;
    std::string field_name;
    bool irreducible;
    FactorizationResult factorization;
};
struct EvidenceReport {
    static constexpr const char* kLabel = "EVIDENCE";
    std::vector<EvidenceEntry> entries;
    bool all_irreducible() const;
};

// F must live over a prime field. Throws BudgetExceeded, UnsupportedDomain.
EvidenceReport absolute_irreducibility_evidence(const MultiPoly& F, unsigned k_max,
                                                uint64_t budget = kDefaultOracleBudget);

// One-sided mod-p lift: an admissible prime preserves every per-variable
// degree and the total degree of the content-normalized F; an exhaustively
// irreducible image certifies irreducibility over Q (Gauss). A reducible or
// budget-exceeded image proves nothing; the next prime is tried.
struct ModpVerdict {
    bool irreducible = false;   // false means inconclusive
    uint64_t prime = 0;         // certifying prime when irreducible
    std::vector<std::string> log; // one note per prime attempted
};

// Throws NoAdmissiblePrime when every listed prime drops a degree.
ModpVerdict irreducible_over_Q_via_modp(const MultiPoly& F,
                                        const std::vector<uint64_t>& primes,
                                        uint64_t budget = kDefaultOracleBudget);

// Counts alpha in the algebraic closure with p(alpha) = 0 and
// D^1 p(alpha) != 0, by scanning F_{p^k} for k = 1..k_max and keeping only
// elements of exact degree k (deduplication across fields). p must be
// univariate over a prime field; k_max defaults to deg p when 0.
int simple_root_count_bruteforce(const MultiPoly& p, unsigned k_max = 0,
                                 uint64_t budget = kDefaultOracleBudget);

} // namespace polycert

#endif
