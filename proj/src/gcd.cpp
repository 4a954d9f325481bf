#include "polycert/multipoly.hpp"

#include <algorithm>
#include <cassert>

namespace polycert {

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
    auto [r, d] = aligned(p, q);
    MultiPoly quot = MultiPoly::zero(r.domain(), r.vars());
    const Exponents dle = d.leading_exponents();
    const FieldElement dlc = d.leading_coeff();
    // Single-divisor reduction under grlex; (q) is its own Groebner basis,
    // so remainder zero is equivalent to divisibility.
    while (!r.is_zero()) {
        const Exponents rle = r.leading_exponents();
        Exponents shift(rle.size());
        for (size_t i = 0; i < rle.size(); ++i) {
            if (rle[i] < dle[i]) return std::nullopt;
            shift[i] = rle[i] - dle[i];
        }
        FieldElement c = r.leading_coeff() / dlc;
        MultiPoly t = MultiPoly::zero(r.domain(), r.vars());
        t.set_coeff(shift, c);
        quot = quot + t;
        r = r - t * d;
    }
    return quot;
}

namespace {

// Dense-in-main-variable helpers over the coefficient ring K[other vars].
using Poly1 = std::vector<MultiPoly>;

int deg1(const Poly1& a) {
    int d = static_cast<int>(a.size()) - 1;
    while (d >= 0 && a[static_cast<size_t>(d)].is_zero()) --d;
    return d;
}

void trim1(Poly1& a) { a.resize(static_cast<size_t>(deg1(a) + 1)); }

// Pseudo-remainder prem(a, b): lc(b)^(deg a - deg b + 1) * a mod b.
Poly1 prem1(Poly1 a, const Poly1& b, const FieldPtr& dom) {
    int db = deg1(b);
    const MultiPoly& blc = b[static_cast<size_t>(db)];
    int steps = deg1(a) - db + 1;
    int done = 0;
    while (true) {
        int da = deg1(a);
        if (da < db) break;
        MultiPoly c = a[static_cast<size_t>(da)];
        for (auto& x : a) x = x * blc;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(da - db + i)] =
                a[static_cast<size_t>(da - db + i)] - c * b[static_cast<size_t>(i)];
        ++done;
    }
    for (; done < steps; ++done)
        for (auto& x : a) x = x * blc;
    trim1(a);
    (void)dom;
    return a;
}

Poly1 exact_div1(const Poly1& a, const MultiPoly& c) {
    Poly1 out = a;
    for (auto& x : out) {
        if (x.is_zero()) continue;
        auto q = divide_exact(x, c);
        assert(q && "subresultant coefficient division must be exact");
        x = *q;
    }
    return out;
}

MultiPoly content1(const Poly1& a) {
    MultiPoly c;
    bool first = true;
    for (const auto& x : a) {
        if (x.is_zero()) continue;
        c = first ? x : gcd(c, x);
        first = false;
    }
    assert(!first);
    return c.monic();
}

Poly1 primitive1(const Poly1& a, const MultiPoly& cont) {
    Poly1 out = a;
    for (auto& x : out) {
        if (x.is_zero()) continue;
        auto q = divide_exact(x, cont);
        assert(q);
        x = *q;
    }
    return out;
}

// Subresultant PRS gcd of primitive inputs; returns the primitive gcd.
Poly1 prim_gcd1(Poly1 a, Poly1 b, const FieldPtr& dom) {
    if (deg1(a) < deg1(b)) std::swap(a, b);
    MultiPoly one = MultiPoly::constant(dom, 1);
    if (deg1(b) == 0) return {one}; // a primitive, constant b => unit gcd
    MultiPoly g = one, h = one;
    while (true) {
        int delta = deg1(a) - deg1(b);
        Poly1 r = prem1(a, b, dom);
        if (deg1(r) < 0) {
            // b divides; primitive part of b is the gcd
            MultiPoly c = content1(b);
            return primitive1(b, c);
        }
        if (deg1(r) == 0) return {one};
        a = std::move(b);
        MultiPoly denom = g * h.pow(static_cast<unsigned>(delta));
        b = exact_div1(r, denom);
        g = a[static_cast<size_t>(deg1(a))];
        if (delta > 0) {
            auto q = divide_exact(g.pow(static_cast<unsigned>(delta)),
                                  h.pow(static_cast<unsigned>(delta - 1)));
            assert(q);
            h = *q;
        }
    }
}

Poly1 to_poly1(const MultiPoly& p, const std::string& var) {
    MainVarView v = MainVarView::of(p, var);
    return v.coeffs;
}

MultiPoly from_poly1(const Poly1& a, const FieldPtr& dom, const std::string& var) {
    return MainVarView::from_coeffs(dom, var, a).assemble();
}

} // namespace

MultiPoly gcd(const MultiPoly& p, const MultiPoly& q) {
    auto [a, b] = aligned(p, q);
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const FieldPtr& dom = a.domain();
    if (a.is_constant() || b.is_constant())
        return MultiPoly::constant(dom, 1, a.vars());

    // Last effective variable hosts the remainder sequence.
    std::string main;
    for (const auto& v : a.vars())
        if (a.degree(v) > 0 || b.degree(v) > 0) main = v;
    assert(!main.empty());

    Poly1 va = to_poly1(a, main);
    Poly1 vb = to_poly1(b, main);
    MultiPoly ca = content1(va);
    MultiPoly cb = content1(vb);
    MultiPoly cg = gcd(ca, cb);
    Poly1 pg = prim_gcd1(primitive1(va, ca), primitive1(vb, cb), dom);
    MultiPoly g = cg * from_poly1(pg, dom, main);
    return g.with_vars(MultiPoly::var_union(g, a)).monic();
}

// --- content / primitivity in a chosen main variable ---

std::pair<MultiPoly, MainVarView> content_and_primitive(const MainVarView& p) {
    if (p.is_zero()) throw ZeroPolynomial("content of the zero polynomial");
    MultiPoly cont = content1(p.coeffs);
    Poly1 prim = primitive1(p.coeffs, cont);
    return {cont, MainVarView::from_coeffs(p.dom, p.main_var, std::move(prim))};
}

bool is_primitive_in(const MainVarView& p) {
    if (p.is_zero()) throw ZeroPolynomial("primitivity of the zero polynomial");
    return content1(p.coeffs).is_constant();
}

} // namespace polycert
