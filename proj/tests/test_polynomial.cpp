#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycert/multipoly.hpp"
#include "polycert/parse.hpp"
#include "polycert/rng.hpp"
#include "test_util.hpp"

using namespace polycert;
using testutil::random_bivariate;
using testutil::random_element;
using testutil::random_univariate;

namespace {
MultiPoly P(const std::string& s, const FieldPtr& dom) { return parse_poly(s, dom); }
} // namespace

TEST_CASE("ring arithmetic: fixed anchors") {
    FieldPtr Q = rationals();
    CHECK(P("(x+y)*(x-y)", Q) == P("x^2-y^2", Q));
    CHECK(P("(y-x^3)*(y^2+x^2)", Q) == P("y^3 - x^3*y^2 + x^2*y - x^5", Q));
    FieldPtr F3 = prime_field(3);
    CHECK(P("(x^2-1)^3", F3) == P("x^6+2", F3)); // freshman's dream mod 3
}

TEST_CASE("ring axioms on randomized triples") {
    SplitMix64 rng(11);
    for (const FieldPtr& dom : {rationals(), prime_field(5)}) {
        for (int iter = 0; iter < 60; ++iter) {
            MultiPoly a = random_bivariate(rng, dom, 2, false);
            MultiPoly b = random_bivariate(rng, dom, 2, false);
            MultiPoly c = random_bivariate(rng, dom, 2, false);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == MultiPoly::zero(dom));
            CHECK(a + MultiPoly::zero(dom) == a);
            CHECK(a * MultiPoly::constant(dom, 1) == a);
        }
    }
}

TEST_CASE("division in the main variable") {
    FieldPtr Q = rationals();
    MultiPoly F = P("y^3 - x^3*y^2 + x^2*y - x^5 + 1", Q);
    DivRemResult d = divrem_in_var(MainVarView::of(F, "y"),
                                   MainVarView::of(P("y - x^3", Q), "y"));
    CHECK(d.quotient == P("y^2 + x^2", Q));
    CHECK(d.remainder == P("1", Q));
    CHECK_FALSE(d.exact);

    DivRemResult self = divrem_in_var(MainVarView::of(F, "y"), MainVarView::of(F, "y"));
    CHECK(self.quotient == P("1", Q));
    CHECK(self.remainder.is_zero());
    CHECK(self.exact);

    DivRemResult e = divrem_in_var(MainVarView::of(P("y^2+1", Q), "y"),
                                   MainVarView::of(P("y - x", Q), "y"));
    CHECK(e.quotient == P("y + x", Q));
    CHECK(e.remainder == P("x^2 + 1", Q));
}

TEST_CASE("divrem reassembly property") {
    SplitMix64 rng(12);
    for (const FieldPtr& dom : {rationals(), prime_field(5)}) {
        for (int iter = 0; iter < 80; ++iter) {
            MultiPoly p = random_bivariate(rng, dom, 2, false);
            MultiPoly q = random_bivariate(rng, dom, 2, true);
            if (q.degree("y") < 1) continue;
            MainVarView pv = MainVarView::of(p, "y"), qv = MainVarView::of(q, "y");
            DivRemResult d = divrem_in_var(pv, qv);
            CHECK(d.scale * p == q * d.quotient + d.remainder);
            CHECK(d.remainder.degree("y") < q.degree("y"));
            if (d.exact) CHECK(d.remainder.is_zero());
        }
    }
}

TEST_CASE("substitution") {
    FieldPtr Q = rationals();
    MultiPoly p = P("x1 * x2", Q);
    MultiPoly sq1 = P("x1^2", Q), sq2 = P("x2^2", Q);
    CHECK(p.substitute({{"x1", sq1}, {"x2", sq2}}) == P("x1^2 * x2^2", Q));
    CHECK(p.substitute({}) == p); // identity
    MultiPoly f = P("x^3", Q);
    MultiPoly uv = parse_poly("u + v", Q, /*allow_reserved=*/true);
    CHECK(f.substitute({{"x", uv}}) ==
          parse_poly("u^3 + 3*u^2*v + 3*u*v^2 + v^3", Q, true));
}

TEST_CASE("Hasse derivatives") {
    FieldPtr F2 = prime_field(2), F5 = prime_field(5), Q = rationals();
    CHECK(P("x^3", F2).hasse_derivative("x", 2) == P("x", F2)); // C(3,2) = 3 = 1 mod 2
    CHECK(P("x^5", F5).derivative("x").is_zero());              // D(x^p) = 0 in F_p
    SplitMix64 rng(13);
    for (int iter = 0; iter < 50; ++iter) { // Leibniz rule
        MultiPoly f = random_univariate(rng, Q, "x", 4);
        MultiPoly g = random_univariate(rng, Q, "x", 4);
        CHECK((f * g).derivative("x") == f.derivative("x") * g + f * g.derivative("x"));
    }
}

TEST_CASE("content and primitivity") {
    FieldPtr Q = rationals();
    auto [cont, prim] = content_and_primitive(MainVarView::of(P("x*y + x^2", Q), "y"));
    CHECK(cont == P("x", Q));
    CHECK(prim.assemble() == P("y + x", Q));
    CHECK(is_primitive_in(MainVarView::of(P("(x^2-1)*y + 1", Q), "y")));
    CHECK_FALSE(is_primitive_in(MainVarView::of(P("x*(y+1)", Q), "y")));
    CHECK_THROWS_AS(content_and_primitive(MainVarView::of(MultiPoly::zero(Q), "y")),
                    ZeroPolynomial);
}

TEST_CASE("Lemma primitivo: primitivity survives nonconstant substitution") {
    FieldPtr Q = rationals();
    SplitMix64 rng(14);
    for (int iter = 0; iter < 60; ++iter) {
        MultiPoly p = random_bivariate(rng, Q, 2, true);
        MainVarView v = MainVarView::of(p, "y");
        if (v.degree() < 1 || !is_primitive_in(v)) continue;
        MultiPoly h = random_univariate(rng, Q, "x", 3, true);
        MultiPoly g = random_univariate(rng, Q, "y", 3, true);
        MultiPoly image = p.substitute({{"x", h}, {"y", g}});
        if (image.degree("y") < 1) continue;
        CHECK(is_primitive_in(MainVarView::of(image, "y")));
    }
}

TEST_CASE("gcd: anchors and algebraic laws") {
    FieldPtr Q = rationals();
    CHECK(gcd(P("x^2-1", Q), P("x^2+x", Q)) == P("x+1", Q));
    CHECK(gcd(P("3*x+3", Q), MultiPoly::zero(Q)) == P("x+1", Q)); // monic normalization
    SplitMix64 rng(15);
    for (const FieldPtr& dom : {rationals(), prime_field(5)}) {
        for (int iter = 0; iter < 40; ++iter) {
            MultiPoly a = random_bivariate(rng, dom, 2, true);
            MultiPoly b = random_bivariate(rng, dom, 2, true);
            MultiPoly g = gcd(a, b);
            CHECK(divide_exact(a, g).has_value());
            CHECK(divide_exact(b, g).has_value());
            CHECK(gcd(b, a) == g); // symmetry
            FieldElement s = random_element(rng, dom);
            if (s.is_zero()) s = FieldElement::from_int(dom, 2);
            CHECK(gcd(a.scale(s), b) == g); // invariance under nonzero scaling
        }
    }
}

TEST_CASE("Lemma zurgu: coprimality survives substitution over Q") {
    FieldPtr Q = rationals();
    SplitMix64 rng(16);
    int checked = 0;
    while (checked < 40) {
        MultiPoly a = random_univariate(rng, Q, "x", 3, true);
        MultiPoly b = random_univariate(rng, Q, "x", 3, true);
        if (!gcd(a, b).is_constant()) continue;
        MultiPoly h = random_univariate(rng, Q, "x", 3, true);
        CHECK(gcd(a.substitute({{"x", h}}), b.substitute({{"x", h}})).is_constant());
        ++checked;
    }
}

TEST_CASE("square-free decomposition") {
    FieldPtr Q = rationals(), F3 = prime_field(3);
    SquareFreeDecomposition d = squarefree_decompose(P("(x-1)^2*(x-2)", Q));
    REQUIRE(d.parts.size() == 2);
    CHECK(d.parts[0] == std::pair<MultiPoly, unsigned>(P("x-2", Q), 1u));
    CHECK(d.parts[1] == std::pair<MultiPoly, unsigned>(P("x-1", Q), 2u));

    SquareFreeDecomposition e = squarefree_decompose(P("(x^2-1)^3", F3));
    REQUIRE(e.parts.size() == 1);
    CHECK(e.parts[0].first == P("x^2-1", F3).monic());
    CHECK(e.parts[0].second == 3);

    CHECK_THROWS_AS(squarefree_decompose(P("5", Q)), ConstantInput);
}

TEST_CASE("square-free reassembly, exhaustively over monic cubics in F_3[x]") {
    FieldPtr F3 = prime_field(3);
    MultiPoly x = MultiPoly::variable(F3, "x");
    for (long c0 = 0; c0 < 3; ++c0)
        for (long c1 = 0; c1 < 3; ++c1)
            for (long c2 = 0; c2 < 3; ++c2) {
                MultiPoly p = x.pow(3) + x.pow(2).scale(FieldElement::from_int(F3, c2)) +
                              x.scale(FieldElement::from_int(F3, c1)) +
                              MultiPoly::constant(F3, c0);
                SquareFreeDecomposition d = squarefree_decompose(p);
                CHECK(d.reassemble() == p);
                for (size_t i = 0; i < d.parts.size(); ++i)
                    for (size_t j = i + 1; j < d.parts.size(); ++j)
                        CHECK(gcd(d.parts[i].first, d.parts[j].first).is_constant());
            }
}

TEST_CASE("multiplicity-one part") {
    FieldPtr Q = rationals(), F3 = prime_field(3);
    CHECK(multiplicity_one_part(P("x1^2 * x2^2", Q)).is_constant());
    CHECK(multiplicity_one_part(P("(x-1)*(x-2)^3", Q)) == P("x-1", Q));
    CHECK(multiplicity_one_part(P("(x-1)^2*(x-2)", F3)) == P("x-2", F3));
    // p-th-power component in char p is refused.
    CHECK_THROWS_AS(multiplicity_one_part(P("(x^2-1)^3", F3)), CharPInseparable);
    CHECK_THROWS_AS(multiplicity_one_part(P("x^3*(x-2)", F3)), CharPInseparable);
}

TEST_CASE("simple root counting") {
    FieldPtr Q = rationals(), F3 = prime_field(3);
    CHECK(simple_root_count(P("x^2-1", Q)) == 2);
    CHECK(simple_root_count(P("(x^2-1)^3", F3)) == 0);
    CHECK(simple_root_count(P("(x-1)^2", Q)) == 0);
    CHECK_THROWS_AS(simple_root_count(P("7", Q)), ConstantInput);
}

TEST_CASE("Lemma jorgelema: (f-a)(f-b) keeps two simple roots") {
    SplitMix64 rng(17);
    for (const FieldPtr& dom : {rationals(), prime_field(5)}) {
        int checked = 0;
        while (checked < 60) {
            MultiPoly f = random_univariate(rng, dom, "x", 4, true);
            if (f.derivative("x").is_zero()) continue;
            FieldElement a = random_element(rng, dom);
            FieldElement b = random_element(rng, dom);
            if (a == b) continue;
            MultiPoly prod = (f - MultiPoly::constant(dom, a)) * (f - MultiPoly::constant(dom, b));
            CHECK(simple_root_count(prod) >= 2);
            ++checked;
        }
    }
}

TEST_CASE("composition corollary: h of f keeps the simple-root count") {
    FieldPtr Q = rationals();
    SplitMix64 rng(18);
    int checked = 0;
    while (checked < 60) {
        MultiPoly h = random_univariate(rng, Q, "x", 3, true);
        int n = simple_root_count(h);
        if (n < 2) continue;
        MultiPoly f = random_univariate(rng, Q, "x", 3, true);
        if (f.derivative("x").is_zero()) continue;
        CHECK(simple_root_count(h.substitute({{"x", f}})) >= n);
        ++checked;
    }
}

TEST_CASE("canonical printing round-trips through the parser") {
    SplitMix64 rng(19);
    for (const FieldPtr& dom : {rationals(), prime_field(7)}) {
        for (int iter = 0; iter < 60; ++iter) {
            MultiPoly p = random_bivariate(rng, dom, 3, false);
            CHECK(parse_poly(p.to_string(), dom) == p);
        }
    }
}
