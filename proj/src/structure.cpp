#include "polycert/multipoly.hpp"

#include <algorithm>
#include <cassert>

namespace polycert {

namespace {

std::string single_var(const MultiPoly& p) {
    std::string v;
    for (const auto& w : p.vars()) {
        if (p.degree(w) > 0) {
            if (!v.empty()) throw ConstantInput("expected a univariate polynomial, got " + p.to_string());
            v = w;
        }
    }
    if (v.empty()) throw ConstantInput("expected a nonconstant polynomial, got " + p.to_string());
    return v;
}

// f = h(x^p) -> h, with coefficientwise Frobenius roots (perfect fields).
MultiPoly poly_pth_root(const MultiPoly& f, const std::string& var, uint64_t p) {
    MultiPoly out = MultiPoly::zero(f.domain(), f.vars());
    size_t vi = 0;
    for (size_t i = 0; i < f.vars().size(); ++i)
        if (f.vars()[i] == var) vi = i;
    for (const auto& [e, c] : f.terms()) {
        assert(e[vi] % p == 0);
        Exponents ne = e;
        ne[vi] = static_cast<unsigned>(e[vi] / p);
        out.set_coeff(ne, c.pth_root());
    }
    return out;
}

void emit_part(std::vector<std::pair<MultiPoly, unsigned>>& parts, const MultiPoly& f, unsigned m) {
    if (!f.is_constant()) parts.emplace_back(f, m);
}

// Square-free decomposition over a finite field (Musser iteration with a
// Frobenius unwind for the p-th power residue).
void sqf_char_p(const MultiPoly& fmonic, const std::string& var, uint64_t p, unsigned multiplier,
                std::vector<std::pair<MultiPoly, unsigned>>& parts) {
    MultiPoly fp = fmonic.derivative(var);
    if (fp.is_zero()) {
        sqf_char_p(poly_pth_root(fmonic, var, p), var, p,
                   multiplier * static_cast<unsigned>(p), parts);
        return;
    }
    MultiPoly g = gcd(fmonic, fp);
    MultiPoly w = *divide_exact(fmonic, g);
    unsigned i = 1;
    while (!w.is_constant()) {
        MultiPoly y = gcd(w, g);
        MultiPoly z = *divide_exact(w, y);
        emit_part(parts, z.monic(), multiplier * i);
        ++i;
        w = std::move(y);
        g = *divide_exact(g, w);
    }
    if (!g.is_constant())
        sqf_char_p(poly_pth_root(g.monic(), var, p), var, p,
                   multiplier * static_cast<unsigned>(p), parts);
}

// Yun's algorithm, characteristic zero.
void sqf_char_0(const MultiPoly& fmonic, const std::string& var,
                std::vector<std::pair<MultiPoly, unsigned>>& parts) {
    MultiPoly fp = fmonic.derivative(var);
    MultiPoly g = gcd(fmonic, fp);
    if (g.is_constant()) {
        emit_part(parts, fmonic, 1);
        return;
    }
    MultiPoly w = *divide_exact(fmonic, g);
    MultiPoly y = *divide_exact(fp, g);
    MultiPoly z = y - w.derivative(var);
    unsigned i = 1;
    while (!w.is_constant()) {
        MultiPoly gi = gcd(w, z);
        emit_part(parts, gi.monic(), i);
        w = *divide_exact(w, gi);
        y = *divide_exact(z, gi);
        z = y - w.derivative(var);
        ++i;
    }
}

} // namespace

MultiPoly SquareFreeDecomposition::reassemble() const {
    assert(!parts.empty() || unit.domain());
    MultiPoly out = MultiPoly::constant(unit.domain(), unit);
    for (const auto& [f, m] : parts) out = out * f.pow(m);
    return out;
}

SquareFreeDecomposition squarefree_decompose(const MultiPoly& p) {
    std::string var = single_var(p); // throws ConstantInput
    SquareFreeDecomposition d;
    d.unit = p.leading_coeff();
    MultiPoly f = p.monic();
    uint64_t ch = p.domain()->characteristic();
    if (ch == 0) sqf_char_0(f, var, d.parts);
    else sqf_char_p(f, var, ch, 1, d.parts);
    std::sort(d.parts.begin(), d.parts.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return d;
}

MultiPoly multiplicity_one_part(const MultiPoly& p) {
    if (p.is_constant()) throw ConstantInput("multiplicity analysis of a constant");
    MultiPoly g;
    bool started = false;
    for (const auto& v : p.vars()) {
        if (p.degree(v) <= 0) continue;
        MultiPoly d = p.derivative(v);
        if (d.is_zero()) continue;
        g = started ? gcd(g, d) : gcd(p, d);
        started = true;
    }
    if (!started) g = p.monic(); // all partials vanish: p itself is a p-th power
    MultiPoly s = *divide_exact(p.monic(), g.monic());

    uint64_t ch = p.domain()->characteristic();
    if (ch > 0) {
        // A factor q^ch (equivalently, multiplicity >= ch) silently drops out
        // of s; detect it by stripping s-layers at most ch-1 times.
        MultiPoly r = p.monic();
        uint64_t rounds = 0;
        while (true) {
            if (r.is_constant()) break;
            if (rounds >= ch - 1)
                throw CharPInseparable("input has a p-th power factor (p = " +
                                       std::to_string(ch) + "): " + p.to_string());
            MultiPoly t = gcd(r, s);
            if (t.is_constant())
                throw CharPInseparable("input has a p-th power factor (p = " +
                                       std::to_string(ch) + "): " + p.to_string());
            r = *divide_exact(r, t);
            ++rounds;
        }
    }
    MultiPoly rep = gcd(s, g);
    return divide_exact(s, rep)->monic();
}

int simple_root_count(const MultiPoly& p) {
    // Degree of the multiplicity-one layer; square-free univariate
    // polynomials over these (perfect) fields are separable, so the degree
    // counts distinct roots in the closure.
    std::string var = single_var(p); // throws ConstantInput
    SquareFreeDecomposition d = squarefree_decompose(p);
    for (const auto& [f, m] : d.parts)
        if (m == 1) return f.degree(var);
    return 0;
}

} // namespace polycert
