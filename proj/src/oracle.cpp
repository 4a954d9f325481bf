#include "polycert/oracle.hpp"

#include <algorithm>

namespace polycert {

namespace {

// Canonical order on polynomials: total degree, then terms compared from the
// grlex-leading end (exponents first, then coefficients).
bool canonical_poly_less(const MultiPoly& a, const MultiPoly& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    auto [aa, bb] = aligned(a, b);
    auto ia = aa.terms().rbegin(), ib = bb.terms().rbegin();
    GrlexLess less;
    for (; ia != aa.terms().rend() && ib != bb.terms().rend(); ++ia, ++ib) {
        if (ia->first != ib->first) return less(ib->first, ia->first);
        int c = ia->second.cmp(ib->second);
        if (c != 0) return c < 0;
    }
    return ia == aa.terms().rend() && ib != bb.terms().rend();
}

std::vector<std::string> effective_vars(const MultiPoly& p) {
    std::vector<std::string> out;
    for (const auto& v : p.vars())
        if (p.degree(v) > 0) out.push_back(v);
    return out;
}

// Exponent vectors over `vars` with e_i <= caps[i] and total degree <= half,
// sorted ascending grlex. The constant monomial is monos[0].
std::vector<Exponents> candidate_monomials(const std::vector<unsigned>& caps, unsigned half) {
    std::vector<Exponents> monos;
    Exponents e(caps.size(), 0);
    while (true) {
        unsigned tot = 0;
        for (unsigned x : e) tot += x;
        if (tot <= half) monos.push_back(e);
        size_t i = 0;
        while (i < e.size() && ++e[i] > caps[i]) e[i++] = 0;
        if (i == e.size()) break;
    }
    std::sort(monos.begin(), monos.end(), GrlexLess{});
    return monos;
}

// Smallest (graded-lex) monic divisor of monic M with total degree in
// [1, totdeg M / 2], or nullopt. Counts every candidate tested.
std::optional<MultiPoly> find_divisor(const MultiPoly& M, uint64_t budget,
                                      uint64_t& tested) {
    const FieldPtr& dom = M.domain();
    std::vector<std::string> vars = effective_vars(M);
    unsigned half = static_cast<unsigned>(M.total_degree()) / 2;
    if (half < 1 || vars.empty()) return std::nullopt;
    std::vector<unsigned> caps;
    for (const auto& v : vars)
        caps.push_back(std::min<unsigned>(static_cast<unsigned>(M.degree(v)), half));
    std::vector<Exponents> monos = candidate_monomials(caps, half);

    // A leading monomial at position i leaves the i grlex-smaller monomials'
    // coefficients free, so the full scan is sum_{i>=1} q^i candidates.
    uint64_t q = dom->order();
    mpz_class required = 0;
    mpz_class power = q;
    for (size_t i = 1; i < monos.size(); ++i) {
        required += power;
        power *= q;
    }
    if (required > budget)
        throw BudgetExceeded("exhaustive divisor scan requires " + required.get_str() +
                             " candidates, budget is " + std::to_string(budget));

    std::vector<FieldElement> elems = all_field_elements(dom);
    for (size_t lead = 1; lead < monos.size(); ++lead) {
        std::vector<size_t> digits(lead, 0);
        while (true) {
            MultiPoly G = MultiPoly::zero(dom, vars);
            G.set_coeff(monos[lead], FieldElement::one(dom));
            for (size_t i = 0; i < lead; ++i)
                if (digits[i] != 0) G.set_coeff(monos[i], elems[digits[i]]);
            ++tested;
            if (divide_exact(M, G)) return G;
            size_t i = 0;
            while (i < digits.size() && ++digits[i] == elems.size()) digits[i++] = 0;
            if (i == digits.size()) break;
        }
    }
    return std::nullopt;
}

void factor_rec(MultiPoly M, uint64_t budget, uint64_t& tested,
                std::vector<std::pair<MultiPoly, unsigned>>& out) {
    if (M.is_constant()) return;
    std::optional<MultiPoly> G = find_divisor(M, budget, tested);
    if (!G) {
        out.emplace_back(M, 1u);
        return;
    }
    unsigned mult = 0;
    while (auto quot = divide_exact(M, *G)) {
        M = quot->monic();
        ++mult;
    }
    out.emplace_back(*G, mult);
    factor_rec(M, budget, tested, out);
}

MultiPoly lift_to_extension(const MultiPoly& p, const FieldPtr& ext) {
    MultiPoly out = MultiPoly::zero(ext, p.vars());
    for (const auto& [e, c] : p.terms())
        out.set_coeff(e, FieldElement::from_int(ext, mpz_class(static_cast<unsigned long>(c.residue()))));
    return out;
}

// Clears denominators; sign normalized to a positive leading coefficient.
// The integer content is deliberately kept: a prime dividing it annihilates
// the mod-p image, which the admissibility check then rejects.
MultiPoly integer_normalize(const MultiPoly& F) {
    mpz_class den = 1;
    for (const auto& [e, c] : F.terms()) den = lcm(den, c.rational().get_den());
    MultiPoly out = F.scale(FieldElement::from_int(F.domain(), den));
    if (out.leading_coeff().rational() < 0) out = out.neg();
    return out;
}

MultiPoly reduce_mod(const MultiPoly& F, const FieldPtr& fp) {
    MultiPoly out = MultiPoly::zero(fp, F.vars());
    for (const auto& [e, c] : F.terms()) {
        FieldElement r = FieldElement::from_int(fp, c.rational().get_num());
        if (!r.is_zero()) out.set_coeff(e, r);
    }
    return out;
}

} // namespace

MultiPoly FactorizationResult::reassemble() const {
    MultiPoly out = MultiPoly::constant(field, unit);
    for (const auto& [f, m] : factors) out = out * f.pow(m);
    return out;
}

FactorizationResult factor_exhaustive(const MultiPoly& F, uint64_t budget) {
    const FieldPtr& dom = F.domain();
    if (dom->kind == DomainKind::Rational)
        throw UnsupportedDomain("exhaustive factorization runs over finite fields only");
    if (F.is_zero()) throw ZeroPolynomial("cannot factor the zero polynomial");
    FactorizationResult res;
    res.input = F;
    res.field = dom;
    res.unit = F.leading_coeff();
    for (const auto& v : effective_vars(F))
        res.var_caps[v] = F.degree(v);
    res.total_degree_cap = F.total_degree() / 2;
    factor_rec(F.monic().drop_unused_vars(), budget, res.candidates_tested, res.factors);
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return canonical_poly_less(a.first, b.first); });
    return res;
}

bool EvidenceReport::all_irreducible() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const EvidenceEntry& e) { return e.irreducible; });
}

EvidenceReport absolute_irreducibility_evidence(const MultiPoly& F, unsigned k_max,
                                                uint64_t budget) {
    const FieldPtr& dom = F.domain();
    if (dom->kind != DomainKind::Prime)
        throw UnsupportedDomain("evidence reports start from a prime field");
    EvidenceReport report;
    for (unsigned k = 1; k <= k_max; ++k) {
        FieldPtr fk = dom;
        MultiPoly Fk = F;
        if (k > 1) {
            uint64_t order = 1;
            for (unsigned i = 0; i < k; ++i) order *= dom->p;
            fk = make_extension_field(dom->p, k, order);
            Fk = lift_to_extension(F, fk);
        }
        FactorizationResult fr = factor_exhaustive(Fk, budget);
        report.entries.push_back({k, fk->name(), fr.irreducible(), std::move(fr)});
    }
    return report;
}

ModpVerdict irreducible_over_Q_via_modp(const MultiPoly& F,
                                        const std::vector<uint64_t>& primes,
                                        uint64_t budget) {
    if (F.domain()->kind != DomainKind::Rational)
        throw UnsupportedDomain("the mod-p lift applies to polynomials over Q");
    if (F.is_zero() || F.is_constant())
        throw ConstantInput("irreducibility of a constant is undefined");
    MultiPoly N = integer_normalize(F);
    ModpVerdict verdict;
    bool any_admissible = false;
    for (uint64_t p : primes) {
        FieldPtr fp = prime_field(p);
        MultiPoly img = reduce_mod(N, fp);
        bool admissible = !img.is_zero() && img.total_degree() == N.total_degree();
        if (admissible)
            for (const auto& v : N.vars())
                if (img.degree(v) != N.degree(v)) admissible = false;
        if (!admissible) {
            verdict.log.push_back("p=" + std::to_string(p) + ": inadmissible (degree drops)");
            continue;
        }
        any_admissible = true;
        try {
            FactorizationResult fr = factor_exhaustive(img, budget);
            if (fr.irreducible()) {
                verdict.irreducible = true;
                verdict.prime = p;
                verdict.log.push_back("p=" + std::to_string(p) +
                                      ": image irreducible (certifies over Q)");
                return verdict;
            }
            verdict.log.push_back("p=" + std::to_string(p) +
                                  ": image factors (one-sided, proves nothing)");
        } catch (const BudgetExceeded& e) {
            verdict.log.push_back("p=" + std::to_string(p) + ": " + e.what());
        }
    }
    if (!any_admissible)
        throw NoAdmissiblePrime("every listed prime drops a degree of the input");
    return verdict;
}

int simple_root_count_bruteforce(const MultiPoly& p, unsigned k_max, uint64_t budget) {
    const FieldPtr& dom = p.domain();
    if (dom->kind != DomainKind::Prime)
        throw UnsupportedDomain("brute-force root counting starts from a prime field");
    if (p.is_constant()) throw ConstantInput("root counting needs a nonconstant polynomial");
    std::vector<std::string> vars = effective_vars(p);
    if (vars.size() != 1)
        throw UnsupportedDomain("brute-force root counting is univariate");
    const std::string& var = vars[0];
    if (k_max == 0) k_max = static_cast<unsigned>(p.degree(var));

    int count = 0;
    for (unsigned k = 1; k <= k_max; ++k) {
        uint64_t order = 1;
        for (unsigned i = 0; i < k; ++i) {
            if (order > budget / dom->p + 1)
                throw BudgetExceeded("field F_{p^" + std::to_string(k) + "} exceeds the budget");
            order *= dom->p;
        }
        if (order > budget)
            throw BudgetExceeded("field F_{p^" + std::to_string(k) + "} exceeds the budget");
        FieldPtr fk = k == 1 ? dom : make_extension_field(dom->p, k, order);
        MultiPoly pk = k == 1 ? p : lift_to_extension(p, fk);
        MultiPoly dk = pk.derivative(var);
        for (const FieldElement& a : all_field_elements(fk)) {
            // Keep only elements of exact degree k over F_p.
            bool proper = false;
            for (unsigned j = 1; j < k && !proper; ++j) {
                if (k % j != 0) continue;
                mpz_class pj;
                mpz_ui_pow_ui(pj.get_mpz_t(), static_cast<unsigned long>(dom->p), j);
                if (a.pow(pj) == a) proper = true;
            }
            if (proper) continue;
            if (!pk.evaluate({{var, a}}).is_zero()) continue;
            if (dk.is_zero() || dk.evaluate({{var, a}}).is_zero()) continue;
            ++count;
        }
    }
    return count;
}

} // namespace polycert
