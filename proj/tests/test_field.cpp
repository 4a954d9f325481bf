#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycert/field.hpp"
#include "polycert/rng.hpp"
#include "test_util.hpp"

using namespace polycert;

TEST_CASE("field descriptors and moduli") {
    CHECK(rationals()->name() == "Q");
    CHECK(prime_field(5)->name() == "Fp:5");
    CHECK_THROWS_AS(prime_field(6), NotPrime);
    CHECK_THROWS_AS(prime_field(1), NotPrime);

    // (2,1) degenerates to the prime field.
    FieldPtr f2 = make_extension_field(2, 1);
    CHECK(f2->kind == DomainKind::Prime);

    // F_4: the only irreducible monic quadratic over F_2 is t^2 + t + 1.
    FieldPtr f4 = make_extension_field(2, 2);
    CHECK(f4->modulus == std::vector<uint64_t>{1, 1, 1});

    // F_9: a monic irreducible quadratic with no roots in F_3.
    FieldPtr f9 = make_extension_field(3, 2);
    REQUIRE(f9->modulus.size() == 3);
    CHECK(f9->modulus[2] == 1);
    for (uint64_t a = 0; a < 3; ++a) {
        uint64_t val = (f9->modulus[0] + f9->modulus[1] * a + a * a) % 3;
        CHECK(val != 0);
    }

    CHECK_THROWS_AS(make_extension_field(2, 7), BoundExceeded); // 128 > 64
    CHECK_THROWS_AS(make_extension_field(4, 2), NotPrime);
}

TEST_CASE("exact arithmetic in canonical form") {
    FieldPtr Q = rationals();
    FieldElement half = FieldElement::from_rational(Q, mpq_class(1, 2));
    FieldElement threequarters = FieldElement::from_rational(Q, mpq_class(3, 4));
    CHECK((half / threequarters).rational() == mpq_class(2, 3));

    FieldPtr F5 = prime_field(5);
    CHECK(FieldElement::from_int(F5, 3).inv().residue() == 2);
    CHECK(FieldElement::from_int(F5, -1).residue() == 4); // canonical residue

    FieldPtr F4 = make_extension_field(2, 2);
    FieldElement t = FieldElement::from_residues(F4, {0, 1});
    FieldElement tt = t * t;
    CHECK(tt == FieldElement::from_residues(F4, {1, 1})); // t^2 = t + 1

    CHECK_THROWS_AS(FieldElement::zero(F5).inv(), DivisionByZero);
    CHECK_THROWS_AS(half / FieldElement::zero(Q), DivisionByZero);
    CHECK_THROWS_AS(half + FieldElement::one(F5), DomainMismatch);
}

TEST_CASE("field axioms on randomized triples, every domain") {
    SplitMix64 rng(2024);
    for (const FieldPtr& dom : {rationals(), prime_field(7), make_extension_field(2, 3),
                                make_extension_field(3, 2)}) {
        for (int iter = 0; iter < 200; ++iter) {
            FieldElement a = testutil::random_element(rng, dom);
            FieldElement b = testutil::random_element(rng, dom);
            FieldElement c = testutil::random_element(rng, dom);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + a.neg() == FieldElement::zero(dom));
            if (!a.is_zero()) {
                CHECK(a * a.inv() == FieldElement::one(dom));
                CHECK((a.inv()).inv() == a);
            }
        }
    }
}

TEST_CASE("Frobenius fixes F_{p^k} pointwise at the k-th power") {
    for (const FieldPtr& dom :
         {prime_field(5), make_extension_field(2, 2), make_extension_field(3, 2),
          make_extension_field(2, 3)}) {
        mpz_class order(static_cast<unsigned long>(dom->order()));
        for (const FieldElement& a : all_field_elements(dom)) {
            CHECK(a.pow(order) == a);
            // p-th root inverts the Frobenius on a perfect field.
            CHECK(a.pth_root().pow(mpz_class(static_cast<unsigned long>(dom->p))) == a);
        }
    }
}

TEST_CASE("element enumeration is complete and canonically ordered") {
    FieldPtr F9 = make_extension_field(3, 2);
    std::vector<FieldElement> all = all_field_elements(F9);
    REQUIRE(all.size() == 9);
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].cmp(all[i]) < 0);
    CHECK_THROWS_AS(all_field_elements(rationals()), UnsupportedDomain);
}

TEST_CASE("primality helper") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(97));
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(91)); // 7 * 13
}
