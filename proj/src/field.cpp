#include "polycert/field.hpp"

#include <algorithm>
#include <cassert>

namespace polycert {

namespace {

uint64_t mod_add(uint64_t a, uint64_t b, uint64_t p) { return (a + b) % p; }
uint64_t mod_sub(uint64_t a, uint64_t b, uint64_t p) { return (a + p - b % p) % p; }
uint64_t mod_mul(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t mod_pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t mod_inv(uint64_t a, uint64_t p) {
    if (a % p == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
    // Fermat; p is prime.
    return mod_pow(a % p, p - 2, p);
}

// --- dense univariate arithmetic over F_p, used for the extension field ---

using Vec = std::vector<uint64_t>;

void vec_trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec vec_mul(const Vec& a, const Vec& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Vec c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + mod_mul(a[i], b[j], p)) % p;
    vec_trim(c);
    return c;
}

// a mod m, m monic
Vec vec_rem(Vec a, const Vec& m, uint64_t p) {
    vec_trim(a);
    while (a.size() >= m.size()) {
        uint64_t c = a.back();
        size_t shift = a.size() - m.size();
        if (c != 0) {
            for (size_t i = 0; i < m.size(); ++i)
                a[i + shift] = mod_sub(a[i + shift], mod_mul(c, m[i], p), p);
        }
        a.pop_back();
        vec_trim(a);
    }
    return a;
}

// Quotient of rem by b (b nonzero); rem reduced in place.
Vec vec_divmod(Vec& rem, const Vec& b, uint64_t p) {
    Vec q;
    vec_trim(rem);
    if (rem.size() < b.size()) return q;
    q.assign(rem.size() - b.size() + 1, 0);
    uint64_t linv = mod_inv(b.back(), p);
    while (rem.size() >= b.size()) {
        uint64_t c = mod_mul(rem.back(), linv, p);
        size_t shift = rem.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            rem[i + shift] = mod_sub(rem[i + shift], mod_mul(c, b[i], p), p);
        vec_trim(rem);
        if (rem.empty()) break;
    }
    return q;
}

// Extended Euclid in F_p[t]: returns (g, s) with s*a = g mod m, g = gcd(a, m).
std::pair<Vec, Vec> vec_half_xgcd(Vec a, Vec m, uint64_t p) {
    Vec r0 = std::move(m), r1 = std::move(a);
    Vec s0 = {}, s1 = {1};
    vec_trim(r0);
    vec_trim(r1);
    while (!r1.empty()) {
        Vec rem = r0;
        Vec q = vec_divmod(rem, r1, p);
        // s2 = s0 - q*s1
        Vec qs = vec_mul(q, s1, p);
        Vec s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = mod_sub(s2[i], qs[i], p);
        vec_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    return {r0, s0};
}

bool vec_is_irreducible(const Vec& m, uint64_t p) {
    // m monic of degree k >= 1; trial division by all monic divisors of
    // degree <= k/2. Field orders are capped tiny, so this is instant.
    size_t k = m.size() - 1;
    for (size_t d = 1; 2 * d <= k; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t enc = 0; enc < count; ++enc) {
            Vec g(d + 1, 0);
            uint64_t e = enc;
            for (size_t i = 0; i < d; ++i) {
                g[i] = e % p;
                e /= p;
            }
            g[d] = 1;
            if (vec_rem(m, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t FieldDesc::order() const {
    uint64_t o = 1;
    for (unsigned i = 0; i < k; ++i) o *= p;
    return kind == DomainKind::Rational ? 0 : o;
}

bool FieldDesc::operator==(const FieldDesc& o) const {
    return kind == o.kind && p == o.p && k == o.k && modulus == o.modulus;
}

std::string FieldDesc::name() const {
    switch (kind) {
        case DomainKind::Rational: return "Q";
        case DomainKind::Prime: return "Fp:" + std::to_string(p);
        case DomainKind::Extension:
            return "Fpk:" + std::to_string(p) + ":" + std::to_string(k);
    }
    return "?";
}

FieldPtr rationals() {
    static FieldPtr q = std::make_shared<FieldDesc>(FieldDesc{DomainKind::Rational, 0, 1, {}});
    return q;
}

FieldPtr prime_field(uint64_t p) {
    if (!is_prime_u64(p)) throw NotPrime(std::to_string(p) + " is not prime");
    return std::make_shared<FieldDesc>(FieldDesc{DomainKind::Prime, p, 1, {}});
}

FieldPtr make_extension_field(uint64_t p, unsigned k, uint64_t max_order) {
    if (!is_prime_u64(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (k == 0) throw BoundExceeded("extension degree must be >= 1");
    uint64_t order = 1;
    for (unsigned i = 0; i < k; ++i) {
        order *= p;
        if (order > max_order)
            throw BoundExceeded("field order " + std::to_string(p) + "^" + std::to_string(k) +
                                " exceeds bound " + std::to_string(max_order));
    }
    if (k == 1) return prime_field(p);
    // Smallest encoding Sum c_i p^i wins, so runs are reproducible.
    for (uint64_t enc = 0;; ++enc) {
        Vec m(k + 1, 0);
        uint64_t e = enc;
        for (unsigned i = 0; i < k; ++i) {
            m[i] = e % p;
            e /= p;
        }
        if (e != 0) break; // exhausted; unreachable, irreducibles always exist
        m[k] = 1;
        if (vec_is_irreducible(m, p))
            return std::make_shared<FieldDesc>(FieldDesc{DomainKind::Extension, p, k, m});
    }
    throw NotPrime("no irreducible modulus found"); // unreachable
}

bool same_domain(const FieldPtr& a, const FieldPtr& b) {
    return a == b || (a && b && *a == *b);
}

// --- FieldElement ---

void FieldElement::check_same(const FieldElement& o) const {
    if (!same_domain(dom_, o.dom_))
        throw DomainMismatch("mixed coefficient domains: " + dom_->name() + " vs " + o.dom_->name());
}

FieldElement FieldElement::zero(const FieldPtr& dom) {
    FieldElement e;
    e.dom_ = dom;
    if (dom->kind == DomainKind::Rational) e.q_ = 0;
    else e.r_.assign(dom->k, 0);
    return e;
}

FieldElement FieldElement::one(const FieldPtr& dom) {
    FieldElement e = zero(dom);
    if (dom->kind == DomainKind::Rational) e.q_ = 1;
    else e.r_[0] = 1;
    return e;
}

FieldElement FieldElement::from_int(const FieldPtr& dom, const mpz_class& n) {
    FieldElement e = zero(dom);
    if (dom->kind == DomainKind::Rational) {
        e.q_ = n;
    } else {
        mpz_class r = n % mpz_class(static_cast<unsigned long>(dom->p));
        if (r < 0) r += static_cast<unsigned long>(dom->p);
        e.r_[0] = r.get_ui();
    }
    return e;
}

FieldElement FieldElement::from_rational(const FieldPtr& dom, const mpq_class& q) {
    if (dom->kind != DomainKind::Rational)
        throw DomainMismatch("rational literal in finite field " + dom->name());
    FieldElement e = zero(dom);
    e.q_ = q;
    e.q_.canonicalize();
    return e;
}

FieldElement FieldElement::from_residues(const FieldPtr& dom, std::vector<uint64_t> digits) {
    if (dom->kind == DomainKind::Rational)
        throw DomainMismatch("residue constructor on Q");
    FieldElement e = zero(dom);
    digits.resize(dom->k, 0);
    for (auto& d : digits) d %= dom->p;
    e.r_ = std::move(digits);
    return e;
}

bool FieldElement::is_zero() const {
    if (dom_->kind == DomainKind::Rational) return q_ == 0;
    return std::all_of(r_.begin(), r_.end(), [](uint64_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
    if (dom_->kind == DomainKind::Rational) return q_ == 1;
    if (r_[0] != 1) return false;
    return std::all_of(r_.begin() + 1, r_.end(), [](uint64_t c) { return c == 0; });
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!same_domain(dom_, o.dom_)) return false;
    if (dom_->kind == DomainKind::Rational) return q_ == o.q_;
    return r_ == o.r_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    FieldElement e = *this;
    if (dom_->kind == DomainKind::Rational) {
        e.q_ += o.q_;
    } else {
        for (unsigned i = 0; i < dom_->k; ++i) e.r_[i] = mod_add(r_[i], o.r_[i], dom_->p);
    }
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    FieldElement e = *this;
    if (dom_->kind == DomainKind::Rational) {
        e.q_ -= o.q_;
    } else {
        for (unsigned i = 0; i < dom_->k; ++i) e.r_[i] = mod_sub(r_[i], o.r_[i], dom_->p);
    }
    return e;
}

FieldElement FieldElement::neg() const {
    FieldElement e = *this;
    if (dom_->kind == DomainKind::Rational) {
        e.q_ = -q_;
    } else {
        for (unsigned i = 0; i < dom_->k; ++i) e.r_[i] = mod_sub(0, r_[i], dom_->p);
    }
    return e;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    FieldElement e = zero(dom_);
    switch (dom_->kind) {
        case DomainKind::Rational:
            e.q_ = q_ * o.q_;
            break;
        case DomainKind::Prime:
            e.r_[0] = mod_mul(r_[0], o.r_[0], dom_->p);
            break;
        case DomainKind::Extension: {
            Vec prod = vec_mul(r_, o.r_, dom_->p);
            Vec red = vec_rem(std::move(prod), dom_->modulus, dom_->p);
            red.resize(dom_->k, 0);
            e.r_ = std::move(red);
            break;
        }
    }
    return e;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw DivisionByZero("field inverse of zero in " + dom_->name());
    FieldElement e = zero(dom_);
    switch (dom_->kind) {
        case DomainKind::Rational:
            e.q_ = 1 / q_;
            break;
        case DomainKind::Prime:
            e.r_[0] = mod_inv(r_[0], dom_->p);
            break;
        case DomainKind::Extension: {
            Vec a = r_;
            vec_trim(a);
            auto [g, s] = vec_half_xgcd(a, dom_->modulus, dom_->p);
            // modulus irreducible => g is a nonzero constant
            assert(g.size() == 1);
            uint64_t c = mod_inv(g[0], dom_->p);
            for (auto& x : s) x = mod_mul(x, c, dom_->p);
            s = vec_rem(std::move(s), dom_->modulus, dom_->p);
            s.resize(dom_->k, 0);
            e.r_ = std::move(s);
            break;
        }
    }
    return e;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inv(); }

FieldElement FieldElement::pow(const mpz_class& e) const {
    if (e < 0) return inv().pow(-e);
    FieldElement base = *this;
    FieldElement acc = one(dom_);
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

FieldElement FieldElement::pth_root() const {
    switch (dom_->kind) {
        case DomainKind::Rational:
            throw DomainMismatch("p-th root over Q");
        case DomainKind::Prime:
            return *this; // Frobenius is the identity on F_p
        case DomainKind::Extension: {
            // Frobenius x -> x^p has order k; the inverse is x -> x^(p^(k-1)).
            mpz_class e = 1;
            for (unsigned i = 0; i + 1 < dom_->k; ++i) e *= static_cast<unsigned long>(dom_->p);
            return pow(e);
        }
    }
    throw DomainMismatch("unreachable");
}

int FieldElement::cmp(const FieldElement& o) const {
    check_same(o);
    if (dom_->kind == DomainKind::Rational) return ::cmp(q_, o.q_);
    for (size_t i = r_.size(); i-- > 0;) {
        if (r_[i] != o.r_[i]) return r_[i] < o.r_[i] ? -1 : 1;
    }
    return 0;
}

std::string FieldElement::to_string() const {
    switch (dom_->kind) {
        case DomainKind::Rational:
            return q_.get_str();
        case DomainKind::Prime:
            return std::to_string(r_[0]);
        case DomainKind::Extension: {
            std::string s;
            for (size_t i = r_.size(); i-- > 0;) {
                if (r_[i] == 0) continue;
                if (!s.empty()) s += "+";
                if (i == 0) {
                    s += std::to_string(r_[i]);
                } else {
                    if (r_[i] != 1) s += std::to_string(r_[i]) + "*";
                    s += (i == 1) ? "t" : "t^" + std::to_string(i);
                }
            }
            return s.empty() ? "0" : s;
        }
    }
    return "?";
}

std::vector<FieldElement> all_field_elements(const FieldPtr& dom) {
    if (dom->kind == DomainKind::Rational)
        throw UnsupportedDomain("cannot enumerate the rationals");
    std::vector<FieldElement> out;
    if (dom->kind == DomainKind::Prime) {
        out.reserve(dom->p);
        for (uint64_t r = 0; r < dom->p; ++r)
            out.push_back(FieldElement::from_int(dom, mpz_class(static_cast<unsigned long>(r))));
        return out;
    }
    std::vector<uint64_t> digits(dom->k, 0);
    out.reserve(dom->order());
    while (true) {
        out.push_back(FieldElement::from_residues(dom, digits));
        size_t i = 0;
        while (i < digits.size() && ++digits[i] == dom->p) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace polycert
