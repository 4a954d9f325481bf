#ifndef POLYCERT_FIELD_HPP
#define POLYCERT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "polycert/errors.hpp"

namespace polycert {

enum class DomainKind { Rational, Prime, Extension };

// Coefficient domain descriptor. One of Q, F_p, or F_{p^k} with a fixed monic
// irreducible modulus. Immutable; shared by every element of the domain.
struct FieldDesc {
    DomainKind kind;
    uint64_t p = 0;   // characteristic (0 for Q)
    unsigned k = 1;   // extension degree
    // Extension modulus, degree k, modulus[k] == 1. Coefficients are least
    // nonnegative residues mod p. Empty unless kind == Extension.
    std::vector<uint64_t> modulus;

    uint64_t characteristic() const { return kind == DomainKind::Rational ? 0 : p; }
    // Field order p^k; only meaningful for finite domains.
    uint64_t order() const;
    bool operator==(const FieldDesc& o) const;
    std::string name() const; // "Q", "Fp:5", "Fpk:2:3"
};

using FieldPtr = std::shared_ptr<const FieldDesc>;

FieldPtr rationals();
FieldPtr prime_field(uint64_t p); // throws NotPrime

// F_{p^k} with the lexicographically first (smallest Sum c_i p^i encoding)
// monic irreducible modulus, found by exhaustive search. k == 1 degenerates
// to the prime field. Throws NotPrime / BoundExceeded (p^k > max_order).
FieldPtr make_extension_field(uint64_t p, unsigned k, uint64_t max_order = 64);

bool same_domain(const FieldPtr& a, const FieldPtr& b);
bool is_prime_u64(uint64_t n);

// Exact scalar in one of the three domains, always in canonical form:
// reduced fraction over Q, least nonnegative residue over F_p, residue
// polynomial of degree < k over F_{p^k}. Immutable value type.
class FieldElement {
public:
    FieldElement() = default; // invalid; assign before use

    static FieldElement zero(const FieldPtr& dom);
    static FieldElement one(const FieldPtr& dom);
    static FieldElement from_int(const FieldPtr& dom, const mpz_class& n);
    static FieldElement from_int(const FieldPtr& dom, long n) { return from_int(dom, mpz_class(n)); }
    static FieldElement from_rational(const FieldPtr& dom, const mpq_class& q); // Q only
    // Residue polynomial c_0 + c_1 t + ... (Extension); values reduced mod p.
    static FieldElement from_residues(const FieldPtr& dom, std::vector<uint64_t> digits);

    const FieldPtr& domain() const { return dom_; }

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const; // throws DivisionByZero
    FieldElement neg() const;
    FieldElement inv() const; // throws DivisionByZero
    FieldElement pow(const mpz_class& e) const; // e >= 0, or e < 0 via inverse

    // p-th root (finite domains; bijective since the fields are perfect).
    FieldElement pth_root() const;

    // Total order used only for canonical sorting of outputs; it is not an
    // algebraic order. Q by value; residues lexicographically.
    int cmp(const FieldElement& o) const;
    bool operator<(const FieldElement& o) const { return cmp(o) < 0; }

    const mpq_class& rational() const { return q_; }     // Q only
    uint64_t residue() const { return r_[0]; }           // F_p only
    const std::vector<uint64_t>& residues() const { return r_; } // Extension

    std::string to_string() const;

private:
    FieldPtr dom_;
    mpq_class q_;              // Rational payload
    std::vector<uint64_t> r_;  // Prime: size 1; Extension: size k

    void check_same(const FieldElement& o) const;
};

// All q = p^k elements of a finite domain, in canonical (cmp) order.
// Throws UnsupportedDomain over Q.
std::vector<FieldElement> all_field_elements(const FieldPtr& dom);

} // namespace polycert

#endif
