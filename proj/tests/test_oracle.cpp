#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "polycert/multipoly.hpp"
#include "polycert/oracle.hpp"
#include "polycert/parse.hpp"
#include "polycert/rng.hpp"
#include "test_util.hpp"

using namespace polycert;

namespace {
MultiPoly P(const std::string& s, const FieldPtr& dom) { return parse_poly(s, dom); }
} // namespace

TEST_CASE("exhaustive factorization anchors") {
    FieldPtr F3 = prime_field(3);
    FactorizationResult split = factor_exhaustive(P("x^2 - 1", F3));
    REQUIRE(split.factors.size() == 2);
    CHECK(split.factors[0].first == P("x + 1", F3));
    CHECK(split.factors[1].first == P("x + 2", F3)); // x - 1 canonically
    CHECK(split.reassemble() == P("x^2 - 1", F3));
    CHECK_FALSE(split.irreducible());

    // ((x^2-1)y - 1)^2 over F_2 expands to (x^2 y + y + 1)^2.
    FieldPtr F2 = prime_field(2);
    FactorizationResult sq = factor_exhaustive(P("(x^2*y + y + 1)^2", F2));
    REQUIRE(sq.factors.size() == 1);
    CHECK(sq.factors[0].first == P("x^2*y + y + 1", F2));
    CHECK(sq.factors[0].second == 2);
    CHECK(sq.reassemble() == P("(x^2*y + y + 1)^2", F2));

    FieldPtr F5 = prime_field(5);
    CHECK(factor_exhaustive(P("x^2*y - x*y^2 + 1", F5)).irreducible());

    CHECK_THROWS_AS(factor_exhaustive(P("x^2 - 1", rationals())), UnsupportedDomain);
}

TEST_CASE("cube of a reducible shape keeps its factor structure") {
    // ((x^2 - 1) y)^3 - 1 factors as the product of (x^2-1)y - 1 and a
    // quadratic-in-y cofactor over F_2 (everything collapses mod 2).
    FieldPtr F2 = prime_field(2);
    MultiPoly F = P("((x^2 - 1)*y)^3 - 1", F2);
    FactorizationResult res = factor_exhaustive(F);
    CHECK_FALSE(res.irreducible());
    CHECK(res.reassemble() == F);
    int total = 0;
    for (const auto& [f, m] : res.factors) {
        CHECK(factor_exhaustive(f).irreducible()); // factor stability
        total += f.total_degree() * static_cast<int>(m);
    }
    CHECK(total == F.total_degree()); // degree additivity
}

TEST_CASE("budget accounting") {
    FieldPtr F5 = prime_field(5);
    MultiPoly F = P("x^2*y - x*y^2 + 1", F5);
    try {
        factor_exhaustive(F, 10);
        CHECK(false);
    } catch (const BudgetExceeded& e) {
        // The exception reports the exact candidate count required.
        CHECK(std::string(e.what()).find("candidate") != std::string::npos);
    }
    FactorizationResult res = factor_exhaustive(F);
    CHECK(res.candidates_tested > 0);
    CHECK(res.total_degree_cap == 1); // totdeg 3 / 2
}

TEST_CASE("absolute irreducibility evidence") {
    FieldPtr F5 = prime_field(5);
    EvidenceReport ev = absolute_irreducibility_evidence(P("x*y - y^2 + 2", F5), 2);
    REQUIRE(ev.entries.size() == 2);
    CHECK(ev.entries[0].field_name == "Fp:5");
    CHECK(ev.entries[1].field_name == "Fpk:5:2");
    CHECK(ev.all_irreducible());
    CHECK(std::string(EvidenceReport::kLabel) == "EVIDENCE");

    // x^2 + y^2 over F_3 splits over F_9 where -1 becomes a square.
    FieldPtr F3 = prime_field(3);
    EvidenceReport split = absolute_irreducibility_evidence(P("x^2 + y^2", F3), 2);
    REQUIRE(split.entries.size() == 2);
    CHECK(split.entries[0].irreducible);
    CHECK_FALSE(split.entries[1].irreducible);
    CHECK(split.entries[1].factorization.factors.size() == 2);
    CHECK_FALSE(split.all_irreducible());

    // Any linear polynomial stays irreducible at every k.
    EvidenceReport lin = absolute_irreducibility_evidence(P("y - x", F3), 3);
    CHECK(lin.all_irreducible());

    CHECK_THROWS_AS(absolute_irreducibility_evidence(P("x + y", make_extension_field(2, 2)), 2),
                    UnsupportedDomain);
}

TEST_CASE("mod-p lift to Q") {
    FieldPtr Q = rationals();
    ModpVerdict v1 = irreducible_over_Q_via_modp(P("y^2 - x", Q), {3});
    CHECK(v1.irreducible);
    CHECK(v1.prime == 3);
    REQUIRE(!v1.log.empty());

    ModpVerdict v2 = irreducible_over_Q_via_modp(P("x^2*y - x*y^2 + 1", Q), {5});
    CHECK(v2.irreducible);
    CHECK(v2.prime == 5);

    // p = 2 collapses 2y - 2x entirely; p = 3 certifies the normalized y - x.
    CHECK_THROWS_AS(irreducible_over_Q_via_modp(P("2*y - 2*x", Q), {2}), NoAdmissiblePrime);
    ModpVerdict v3 = irreducible_over_Q_via_modp(P("2*y - 2*x", Q), {2, 3});
    CHECK(v3.irreducible);
    CHECK(v3.prime == 3);

    // One-sidedness: a rationally reducible input is never certified.
    ModpVerdict v4 = irreducible_over_Q_via_modp(P("(y - x)*(y + x + 1)", Q), {3, 5, 7});
    CHECK_FALSE(v4.irreducible);
    CHECK(v4.prime == 0);
    CHECK(v4.log.size() == 3);
}

TEST_CASE("brute-force simple root counts") {
    FieldPtr F3 = prime_field(3);
    CHECK(simple_root_count_bruteforce(P("x^2 - 1", F3)) == 2);
    CHECK(simple_root_count_bruteforce(P("(x^2 - 1)^3", F3)) == 0);
    // x^2 + 1 has no roots in F_3 but two simple roots in F_9.
    CHECK(simple_root_count_bruteforce(P("x^2 + 1", F3)) == 2);
    CHECK(simple_root_count_bruteforce(P("x^2 + 1", F3), 1) == 0);
    CHECK_THROWS_AS(simple_root_count_bruteforce(P("x*y", F3)), UnsupportedDomain);
}

TEST_CASE("brute-force count agrees with the symbolic count (degree <= 3, F_2)") {
    FieldPtr F2 = prime_field(2);
    MultiPoly x = MultiPoly::variable(F2, "x");
    for (int d = 1; d <= 3; ++d) {
        for (unsigned bits = 0; bits < (1u << d); ++bits) {
            MultiPoly p = x.pow(static_cast<unsigned>(d));
            for (int i = 0; i < d; ++i)
                if (bits & (1u << i)) p = p + x.pow(static_cast<unsigned>(i));
            CHECK(simple_root_count_bruteforce(p) == simple_root_count(p));
        }
    }
}

TEST_CASE("reassembly and degree additivity on random inputs") {
    SplitMix64 rng(808);
    for (uint64_t p : {2ull, 3ull}) {
        FieldPtr dom = prime_field(p);
        for (int iter = 0; iter < 40; ++iter) {
            MultiPoly F = testutil::random_bivariate(rng, dom, 2, true);
            if (F.is_constant()) continue;
            FactorizationResult res = factor_exhaustive(F);
            CHECK(res.reassemble() == F);
            for (const std::string& v : {std::string("x"), std::string("y")}) {
                int sum = 0;
                for (const auto& [f, m] : res.factors)
                    sum += std::max(f.degree(v), 0) * static_cast<int>(m);
                CHECK(sum == std::max(F.degree(v), 0));
            }
        }
    }
}
