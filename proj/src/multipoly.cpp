#include "polycert/multipoly.hpp"

#include <algorithm>
#include <cassert>

namespace polycert {

namespace {
constexpr size_t npos = static_cast<size_t>(-1);
}

size_t MultiPoly::var_index(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) return npos;
    return static_cast<size_t>(it - vars_.begin());
}

void MultiPoly::insert_term(const Exponents& e, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        FieldElement s = it->second + c;
        if (s.is_zero()) terms_.erase(it);
        else it->second = s;
    }
}

MultiPoly MultiPoly::zero(const FieldPtr& dom, std::vector<std::string> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    MultiPoly p;
    p.dom_ = dom;
    p.vars_ = std::move(vars);
    return p;
}

MultiPoly MultiPoly::constant(const FieldPtr& dom, const FieldElement& c,
                              std::vector<std::string> vars) {
    MultiPoly p = zero(dom, std::move(vars));
    p.insert_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::constant(const FieldPtr& dom, long n, std::vector<std::string> vars) {
    return constant(dom, FieldElement::from_int(dom, n), std::move(vars));
}

MultiPoly MultiPoly::variable(const FieldPtr& dom, const std::string& name) {
    MultiPoly p = zero(dom, {name});
    p.insert_term({1}, FieldElement::one(dom));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

FieldElement MultiPoly::constant_value() const {
    assert(is_constant());
    if (terms_.empty()) return FieldElement::zero(dom_);
    return terms_.begin()->second;
}

int MultiPoly::degree(const std::string& var) const {
    if (terms_.empty()) return -1;
    size_t i = var_index(var);
    if (i == npos) return 0;
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return static_cast<int>(d);
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // leading grlex term has maximal total degree
    const Exponents& e = terms_.rbegin()->first;
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return static_cast<int>(d);
}

FieldElement MultiPoly::leading_coeff() const {
    if (terms_.empty()) return FieldElement::zero(dom_);
    return terms_.rbegin()->second;
}

Exponents MultiPoly::leading_exponents() const {
    if (terms_.empty()) return Exponents(vars_.size(), 0);
    return terms_.rbegin()->first;
}

FieldElement MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return FieldElement::zero(dom_);
    return it->second;
}

void MultiPoly::set_coeff(const Exponents& e, const FieldElement& c) {
    if (c.is_zero()) terms_.erase(e);
    else terms_[e] = c;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& target) const {
    if (target == vars_) return *this;
    MultiPoly out = zero(dom_, target);
    std::vector<size_t> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        size_t j = out.var_index(vars_[i]);
        assert(j != npos && "with_vars target must be a superset");
        pos[i] = j;
    }
    for (const auto& [e, c] : terms_) {
        Exponents ne(out.vars_.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

MultiPoly MultiPoly::drop_unused_vars() const {
    std::vector<std::string> used;
    for (size_t i = 0; i < vars_.size(); ++i) {
        bool seen = false;
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) { seen = true; break; }
        if (seen) used.push_back(vars_[i]);
    }
    if (used.size() == vars_.size()) return *this;
    MultiPoly out = zero(dom_, used);
    std::vector<size_t> keep;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (std::binary_search(used.begin(), used.end(), vars_[i])) keep.push_back(i);
    for (const auto& [e, c] : terms_) {
        Exponents ne(keep.size());
        for (size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep[j]];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

MultiPoly MultiPoly::rename_var(const std::string& from, const std::string& to) const {
    if (var_index(from) == npos) return *this;
    assert(var_index(to) == npos && "rename target collides");
    std::vector<std::string> nv = vars_;
    nv[var_index(from)] = to;
    size_t old = var_index(from);
    std::vector<std::string> sorted = nv;
    std::sort(sorted.begin(), sorted.end());
    MultiPoly out = zero(dom_, sorted);
    // position of each old slot in the new sorted list
    std::vector<size_t> pos(nv.size());
    for (size_t i = 0; i < nv.size(); ++i) pos[i] = out.var_index(nv[i]);
    (void)old;
    for (const auto& [e, c] : terms_) {
        Exponents ne(nv.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

std::vector<std::string> MultiPoly::var_union(const MultiPoly& a, const MultiPoly& b) {
    std::vector<std::string> u;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(u));
    return u;
}

std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b) {
    if (!same_domain(a.dom_, b.dom_))
        throw DomainMismatch("polynomials over different domains: " + a.dom_->name() + " vs " +
                             b.dom_->name());
    if (a.vars_ == b.vars_) return {a, b};
    auto u = MultiPoly::var_union(a, b);
    return {a.with_vars(u), b.with_vars(u)};
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    auto [a, b] = aligned(*this, o);
    for (const auto& [e, c] : b.terms_) a.insert_term(e, c);
    return a;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    auto [a, b] = aligned(*this, o);
    for (const auto& [e, c] : b.terms_) a.insert_term(e, c.neg());
    return a;
}

MultiPoly MultiPoly::neg() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = c.neg();
    return out;
}

MultiPoly MultiPoly::scale(const FieldElement& s) const {
    if (s.is_zero()) return zero(dom_, vars_);
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = c * s;
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    auto [a, b] = aligned(*this, o);
    MultiPoly out = zero(a.dom_, a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.insert_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly acc = constant(dom_, FieldElement::one(dom_), vars_);
    MultiPoly base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return scale(leading_coeff().inv());
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (!same_domain(dom_, o.dom_)) return false;
    auto [a, b] = aligned(*this, o);
    return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& assignment) const {
    // Target variable set: union of image variables plus untouched ones.
    std::vector<std::string> tvars;
    for (const auto& v : vars_) {
        auto it = assignment.find(v);
        if (it == assignment.end()) {
            tvars.push_back(v);
        } else {
            for (const auto& w : it->second.vars()) tvars.push_back(w);
        }
    }
    std::sort(tvars.begin(), tvars.end());
    tvars.erase(std::unique(tvars.begin(), tvars.end()), tvars.end());

    // Power tables per variable, up to the max exponent seen.
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        unsigned maxe = 0;
        for (const auto& [e, c] : terms_) maxe = std::max(maxe, e[i]);
        MultiPoly img;
        auto it = assignment.find(vars_[i]);
        img = (it == assignment.end()) ? variable(dom_, vars_[i]) : it->second;
        if (!same_domain(img.domain(), dom_))
            throw DomainMismatch("substitution image in a different domain");
        powers[i].push_back(constant(dom_, FieldElement::one(dom_), tvars));
        for (unsigned d = 1; d <= maxe; ++d) powers[i].push_back(powers[i].back() * img);
    }
    MultiPoly out = zero(dom_, tvars);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(dom_, c, tvars);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * powers[i][e[i]];
        out = out + term;
    }
    return out;
}

FieldElement MultiPoly::evaluate(const std::map<std::string, FieldElement>& point) const {
    FieldElement acc = FieldElement::zero(dom_);
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end())
                throw DomainMismatch("evaluate: no value for variable " + vars_[i]);
            t = t * it->second.pow(e[i]);
        }
        acc = acc + t;
    }
    return acc;
}

MultiPoly MultiPoly::hasse_derivative(const std::string& var, unsigned j) const {
    if (j == 0) return *this;
    size_t i = var_index(var);
    MultiPoly out = zero(dom_, vars_);
    if (i == npos) return out;
    for (const auto& [e, c] : terms_) {
        if (e[i] < j) continue;
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), e[i], j);
        FieldElement f = FieldElement::from_int(dom_, bin) * c;
        if (f.is_zero()) continue;
        Exponents ne = e;
        ne[i] -= j;
        out.insert_term(ne, f);
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exponents& e = it->first;
        const FieldElement& c = it->second;
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs[0] == '-';
        std::string abs = negative ? cs.substr(1) : cs;
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        bool wrap = abs.find('+') != std::string::npos || abs.find('*') != std::string::npos;
        if (mono.empty()) {
            s += wrap ? "(" + abs + ")" : abs;
        } else if (abs == "1") {
            s += mono;
        } else {
            s += (wrap ? "(" + abs + ")" : abs) + "*" + mono;
        }
    }
    return s;
}

// --- MainVarView ---

MainVarView MainVarView::of(const MultiPoly& p, const std::string& var) {
    MainVarView v;
    v.main_var = var;
    v.dom = p.domain();
    for (const auto& w : p.vars())
        if (w != var) v.coeff_vars.push_back(w);
    size_t vi = static_cast<size_t>(-1);
    for (size_t i = 0; i < p.vars().size(); ++i)
        if (p.vars()[i] == var) vi = i;
    int d = p.degree(var);
    if (p.is_zero()) return v;
    v.coeffs.assign(static_cast<size_t>(std::max(d, 0)) + 1, MultiPoly::zero(p.domain(), v.coeff_vars));
    for (const auto& [e, c] : p.terms()) {
        unsigned de = (vi == static_cast<size_t>(-1)) ? 0 : e[vi];
        Exponents ne;
        ne.reserve(e.size());
        for (size_t i = 0; i < e.size(); ++i)
            if (i != vi) ne.push_back(e[i]);
        MultiPoly& target = v.coeffs[de];
        target.set_coeff(ne, target.coeff(ne) + c);
    }
    while (!v.coeffs.empty() && v.coeffs.back().is_zero()) v.coeffs.pop_back();
    return v;
}

MainVarView MainVarView::from_coeffs(const FieldPtr& dom, const std::string& var,
                                     std::vector<MultiPoly> coeffs) {
    MainVarView v;
    v.main_var = var;
    v.dom = dom;
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    std::vector<std::string> cv;
    for (const auto& c : coeffs)
        for (const auto& w : c.vars()) cv.push_back(w);
    std::sort(cv.begin(), cv.end());
    cv.erase(std::unique(cv.begin(), cv.end()), cv.end());
    v.coeff_vars = cv;
    for (auto& c : coeffs) c = c.with_vars(cv);
    v.coeffs = std::move(coeffs);
    return v;
}

MultiPoly MainVarView::assemble() const {
    MultiPoly y = MultiPoly::variable(dom, main_var);
    MultiPoly out = MultiPoly::zero(dom, coeff_vars);
    MultiPoly ypow = MultiPoly::constant(dom, FieldElement::one(dom));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero()) out = out + coeffs[i] * ypow;
        ypow = ypow * y;
    }
    return out.with_vars(MultiPoly::var_union(out, y));
}

const MultiPoly& MainVarView::leading() const {
    assert(!coeffs.empty());
    return coeffs.back();
}

// --- division in the main variable ---

DivRemResult divrem_in_var(const MainVarView& p, const MainVarView& q) {
    if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
    const FieldPtr& dom = p.dom;
    MultiPoly one = MultiPoly::constant(dom, FieldElement::one(dom));
    const MultiPoly& qlc = q.leading();
    int dq = q.degree();

    // Attempt plain long division with exact coefficient divisions.
    std::vector<MultiPoly> rem = p.coeffs;
    auto deg_of = [](const std::vector<MultiPoly>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && v[static_cast<size_t>(d)].is_zero()) --d;
        return d;
    };
    int dp = deg_of(rem);
    std::vector<MultiPoly> quot(static_cast<size_t>(std::max(dp - dq + 1, 0)),
                                MultiPoly::zero(dom));
    bool coefficient_exact = true;
    while (true) {
        int dr = deg_of(rem);
        if (dr < dq) break;
        auto t = divide_exact(rem[static_cast<size_t>(dr)], qlc);
        if (!t) {
            coefficient_exact = false;
            break;
        }
        quot[static_cast<size_t>(dr - dq)] = *t;
        for (int i = 0; i <= dq; ++i)
            rem[static_cast<size_t>(dr - dq + i)] =
                rem[static_cast<size_t>(dr - dq + i)] - *t * q.coeffs[static_cast<size_t>(i)];
    }
    if (coefficient_exact) {
        MultiPoly Q = MainVarView::from_coeffs(dom, p.main_var, quot).assemble();
        MultiPoly R = MainVarView::from_coeffs(dom, p.main_var, rem).assemble();
        return {Q, R, R.is_zero(), one};
    }

    // Pseudo-division: lc(q)^(dp-dq+1) * p = q * Q + R.
    rem = p.coeffs;
    dp = deg_of(rem);
    int steps = dp - dq + 1;
    std::vector<MultiPoly> pq(static_cast<size_t>(std::max(steps, 0)), MultiPoly::zero(dom));
    int done = 0;
    while (true) {
        int dr = deg_of(rem);
        if (dr < dq) break;
        MultiPoly c = rem[static_cast<size_t>(dr)];
        for (auto& x : pq) x = x * qlc;
        for (auto& x : rem) x = x * qlc;
        pq[static_cast<size_t>(dr - dq)] = pq[static_cast<size_t>(dr - dq)] + c;
        for (int i = 0; i <= dq; ++i)
            rem[static_cast<size_t>(dr - dq + i)] =
                rem[static_cast<size_t>(dr - dq + i)] - c * q.coeffs[static_cast<size_t>(i)];
        ++done;
    }
    MultiPoly scale = qlc.pow(static_cast<unsigned>(steps));
    // pad remaining scale if the degree dropped early
    for (; done < steps; ++done) {
        for (auto& x : pq) x = x * qlc;
        for (auto& x : rem) x = x * qlc;
    }
    MultiPoly Q = MainVarView::from_coeffs(dom, p.main_var, pq).assemble();
    MultiPoly R = MainVarView::from_coeffs(dom, p.main_var, rem).assemble();
    // The division may still be exact in the ring even though the stepwise
    // coefficient divisions were not.
    if (R.is_zero()) {
        auto exactQ = divide_exact(p.assemble(), q.assemble());
        if (exactQ) return {*exactQ, MultiPoly::zero(dom), true, one};
    }
    return {Q, R, false, scale};
}

} // namespace polycert
