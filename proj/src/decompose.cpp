#include "polycert/decompose.hpp"

#include <algorithm>
#include <set>

namespace polycert {

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        out.push_back(i);
        out.push_back(n / i);
    }
    return out;
}

// All roots in the coefficient field of a univariate (or constant)
// polynomial: exhaustion over F_q, rational-root theorem over Q.
std::vector<FieldElement> poly_roots(const MultiPoly& g) {
    const FieldPtr& dom = g.domain();
    if (g.is_zero()) throw ZeroPolynomial("root-finding on the zero polynomial");
    if (g.is_constant()) return {};
    std::string var;
    for (const auto& v : g.vars())
        if (g.degree(v) > 0) var = v;

    std::vector<FieldElement> roots;
    if (dom->kind != DomainKind::Rational) {
        for (const FieldElement& c : all_field_elements(dom))
            if (g.evaluate({{var, c}}).is_zero()) roots.push_back(c);
        return roots;
    }

    MainVarView view = MainVarView::of(g, var);
    size_t low = 0;
    while (view.coeffs[low].is_zero()) ++low;
    if (low > 0) roots.push_back(FieldElement::zero(dom));
    // Clear denominators; candidates are +-(p/q), p | a_low, q | a_deg.
    mpz_class den = 1;
    for (size_t i = low; i < view.coeffs.size(); ++i)
        den = lcm(den, view.coeffs[i].constant_value().rational().get_den());
    mpz_class a0 = mpq_class(view.coeffs[low].constant_value().rational() * den).get_num();
    mpz_class ad = mpq_class(view.coeffs.back().constant_value().rational() * den).get_num();
    std::set<mpq_class> seen;
    for (const mpz_class& p : positive_divisors(a0))
        for (const mpz_class& q : positive_divisors(ad))
            for (int sign : {1, -1}) {
                mpq_class cand(sign * p, q);
                cand.canonicalize();
                if (!seen.insert(cand).second) continue;
                FieldElement c = FieldElement::from_rational(dom, cand);
                if (g.evaluate({{var, c}}).is_zero()) roots.push_back(c);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Appends every lower part f' (deg <= t) with G(x, f'(x)) constant; G is the
// residual after substituting the already-fixed upper coefficients (acc).
void solve(const MultiPoly& G, int t, const MultiPoly& acc,
           std::vector<MultiPoly>& out) {
    const FieldPtr& dom = G.domain();
    MultiPoly x = MultiPoly::variable(dom, "x");
    if (t == 0) {
        // Constant term c: every positive-degree x-coefficient must vanish.
        MainVarView in_x = MainVarView::of(G.with_vars({"x", "y"}), "x");
        MultiPoly g = MultiPoly::zero(dom);
        bool any = false;
        for (size_t e = 1; e < in_x.coeffs.size(); ++e) {
            if (in_x.coeffs[e].is_zero()) continue;
            g = any ? gcd(g, in_x.coeffs[e]) : in_x.coeffs[e];
            any = true;
        }
        if (!any) {
            // G is x-free: every constant works. Over Q the family f + c is
            // infinite; emit its c = 0 representative (any two members differ
            // by a constant, matching the uniqueness law). Finite fields are
            // enumerated in full.
            if (dom->kind == DomainKind::Rational) {
                out.push_back(acc);
                return;
            }
            for (const FieldElement& c : all_field_elements(dom))
                out.push_back(acc + MultiPoly::constant(dom, c));
            return;
        }
        if (g.is_constant()) return;
        for (const FieldElement& c : poly_roots(g))
            out.push_back(acc + MultiPoly::constant(dom, c));
        return;
    }

    // Branch: deg of the remaining part < t.
    solve(G, t - 1, acc, out);

    // Branch: leading coefficient c x^t with c != 0. The top x-degree
    // coefficient of G(x, c x^t + lower) is S(c) = Sum_{i in M} lc(b_i) c^i.
    MainVarView in_y = MainVarView::of(G.with_vars({"x", "y"}), "y");
    long m = -1;
    for (size_t i = 0; i < in_y.coeffs.size(); ++i) {
        if (in_y.coeffs[i].is_zero()) continue;
        m = std::max(m, in_y.coeffs[i].degree("x") + static_cast<long>(i) * t);
    }
    if (m < 1) return; // G constant or x-free top: no exact-degree-t branch
    MultiPoly z = MultiPoly::variable(dom, "y"); // symbol for the unknown c
    MultiPoly S = MultiPoly::zero(dom);
    for (size_t i = 0; i < in_y.coeffs.size(); ++i) {
        if (in_y.coeffs[i].is_zero()) continue;
        if (in_y.coeffs[i].degree("x") + static_cast<long>(i) * t != m) continue;
        S = S + z.pow(static_cast<unsigned>(i)).scale(in_y.coeffs[i].leading_coeff());
    }
    if (S.is_constant()) return; // only i = 0 hits the top weight
    for (const FieldElement& c : poly_roots(S)) {
        if (c.is_zero()) continue;
        MultiPoly head = x.pow(static_cast<unsigned>(t)).scale(c);
        MultiPoly y = MultiPoly::variable(dom, "y");
        solve(G.substitute({{"y", head + y}}), t - 1, acc + head, out);
    }
}

bool coeff_less(const MultiPoly& a, const MultiPoly& b) {
    int da = a.degree("x"), db = b.degree("x");
    if (da != db) return da < db;
    MainVarView va = MainVarView::of(a.with_vars({"x"}), "x");
    MainVarView vb = MainVarView::of(b.with_vars({"x"}), "x");
    for (int e = da; e >= 0; --e) {
        FieldElement ca = va.coeffs[static_cast<size_t>(e)].constant_value();
        FieldElement cb = vb.coeffs[static_cast<size_t>(e)].constant_value();
        int c = ca.cmp(cb);
        if (c != 0) return c < 0;
    }
    return false;
}

} // namespace

std::vector<Decomposition> find_decompositions(const MultiPoly& F, bool allow_constant_f) {
    for (const auto& v : F.vars())
        if (v != "x" && v != "y" && F.degree(v) > 0)
            throw UnsupportedDomain("decompose expects a bivariate polynomial in x, y");
    if (F.degree("y") < 1)
        throw UnsupportedDomain("decompose requires deg_y F >= 1");
    const FieldPtr& dom = F.domain();
    if (F.degree("x") < 1) {
        if (allow_constant_f)
            throw DegenerateFamily(
                "F depends on y only: every constant c yields (c, F(c)); the "
                "family is reported symbolically, not enumerated");
        return {};
    }
    MainVarView in_y = MainVarView::of(F.with_vars({"x", "y"}), "y");
    const MultiPoly& b0 = in_y.coeffs[0];
    int bound = b0.degree("x") >= 1 ? b0.degree("x") : F.degree("x");

    std::vector<MultiPoly> candidates;
    solve(F, bound, MultiPoly::zero(dom), candidates);

    std::vector<Decomposition> out;
    MultiPoly y = MultiPoly::variable(dom, "y");
    for (const MultiPoly& f : candidates) {
        if (!allow_constant_f && f.degree("x") < 1) continue;
        if (std::any_of(out.begin(), out.end(),
                        [&](const Decomposition& d) { return d.f == f; }))
            continue;
        MultiPoly at_f = F.substitute({{"y", f}});
        if (!at_f.is_constant()) continue; // defensive; solve() guarantees this
        FieldElement r = at_f.constant_value();
        MultiPoly divisor = y - f;
        DivRemResult div = divrem_in_var(MainVarView::of(F - at_f, "y"),
                                         MainVarView::of(divisor, "y"));
        if (!div.exact) continue;
        Decomposition d{f, r, div.quotient};
        if (!verify_decomposition(F, d)) continue;
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) {
        return coeff_less(a.f, b.f);
    });
    return out;
}

bool verify_decomposition(const MultiPoly& F, const Decomposition& d) {
    const FieldPtr& dom = F.domain();
    if (!same_domain(dom, d.f.domain())) return false;
    MultiPoly at_f = F.substitute({{"y", d.f}});
    if (!at_f.is_constant() || at_f.constant_value() != d.r) return false;
    MultiPoly y = MultiPoly::variable(dom, "y");
    return (y - d.f) * d.H + MultiPoly::constant(dom, d.r) == F;
}

} // namespace polycert
