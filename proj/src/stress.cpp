#include "polycert/stress.hpp"

#include "polycert/oracle.hpp"
#include "polycert/rng.hpp"

namespace polycert {

namespace {

const std::vector<uint64_t> kStressPrimes = {2, 3, 5, 7, 11, 13};

MultiPoly random_univariate(SplitMix64& rng, const FieldPtr& Q, const std::string& var,
                            int deg, bool monic) {
    MultiPoly v = MultiPoly::variable(Q, var);
    MultiPoly out = MultiPoly::zero(Q);
    for (int i = 0; i < deg; ++i)
        out = out + v.pow(static_cast<unsigned>(i))
                        .scale(FieldElement::from_int(Q, rng.range(-3, 3)));
    long lead = monic ? 1 : rng.range(1, 3) * (rng.below(2) ? 1 : -1);
    return out + v.pow(static_cast<unsigned>(deg)).scale(FieldElement::from_int(Q, lead));
}

// Nonconstant substitution polynomial, degree biased low so the composed
// polynomial usually stays inside the oracle budget.
MultiPoly random_substitution(SplitMix64& rng, const FieldPtr& Q, const std::string& var) {
    static const int degrees[] = {1, 1, 1, 1, 1, 1, 1, 2, 2, 3};
    return random_univariate(rng, Q, var, degrees[rng.below(10)], false);
}

} // namespace

StressReport run_hip_stress(uint64_t seed, unsigned instances,
                            unsigned compositions_per_instance, uint64_t budget) {
    FieldPtr Q = rationals();
    SplitMix64 rng(seed);
    StressReport report;
    report.seed = seed;
    report.instances = instances;
    report.compositions_per_instance = compositions_per_instance;

    MultiPoly y = MultiPoly::variable(Q, "y");
    for (unsigned inst = 0; inst < instances; ++inst) {
        // Draw until certify_hip accepts: a with >= 2 simple roots, c with
        // deg_y >= 1, b with gcd(a, c_d b) = 1 and a c + b primitive in y.
        MultiPoly a, b, p;
        MainVarView c_view;
        while (true) {
            static const int adegs[] = {2, 2, 2, 3, 3, 4};
            a = random_univariate(rng, Q, "x", adegs[rng.below(6)], true);
            if (simple_root_count(a) < 2) continue;
            unsigned cy = rng.below(4) == 0 ? 2 : 1;
            MultiPoly c = y.pow(cy);
            if (rng.below(2))
                c = c + MultiPoly::variable(Q, "x").scale(
                            FieldElement::from_int(Q, rng.range(-2, 2)));
            b = random_univariate(rng, Q, "x", static_cast<int>(rng.below(3)), false);
            c_view = MainVarView::of(c, "y");
            CheckOutcome hip = certify_hip(a, c_view, b);
            if (!hip.ok()) continue;
            p = a * c + b;
            break;
        }

        for (unsigned comp = 0; comp < compositions_per_instance; ++comp) {
            MultiPoly h1 = random_substitution(rng, Q, "x");
            MultiPoly h2 = random_substitution(rng, Q, "y");
            MultiPoly composed = p.substitute({{"x", h1}, {"y", h2}});
            StressOutcome out;
            out.p = p.to_string();
            out.h1 = h1.to_string();
            out.h2 = h2.to_string();
            out.composed = composed.to_string();
            ModpVerdict verdict = irreducible_over_Q_via_modp(composed, kStressPrimes, budget);
            out.irreducible = verdict.irreducible;
            out.prime = verdict.prime;
            out.oracle_log = std::move(verdict.log);
            if (out.irreducible)
                ++report.irreducible_count;
            else
                ++report.inconclusive_count;
            report.outcomes.push_back(std::move(out));
        }
    }
    return report;
}

} // namespace polycert
