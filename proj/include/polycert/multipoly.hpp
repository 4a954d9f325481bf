#ifndef POLYCERT_MULTIPOLY_HPP
#define POLYCERT_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polycert/field.hpp"

namespace polycert {

using Exponents = std::vector<unsigned>;

// Graded-lexicographic order, ascending (map iteration ends at the leading
// term). Ties in total degree break lexicographically on the exponent
// vector, first variable most significant.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial over an exact coefficient domain.
// Invariants: variable list sorted ascending; every stored coefficient
// nonzero; exponent vectors have the arity of the variable list.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, FieldElement, GrlexLess>;

    MultiPoly() = default;

    static MultiPoly zero(const FieldPtr& dom, std::vector<std::string> vars = {});
    static MultiPoly constant(const FieldPtr& dom, const FieldElement& c,
                              std::vector<std::string> vars = {});
    static MultiPoly constant(const FieldPtr& dom, long n, std::vector<std::string> vars = {});
    static MultiPoly variable(const FieldPtr& dom, const std::string& name);

    const FieldPtr& domain() const { return dom_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant value; zero polynomial reads as 0. Requires is_constant().
    FieldElement constant_value() const;

    int degree(const std::string& var) const; // -1 for the zero polynomial
    int total_degree() const;                 // -1 for the zero polynomial
    FieldElement leading_coeff() const;       // under grlex; 0 for zero poly
    Exponents leading_exponents() const;
    FieldElement coeff(const Exponents& e) const;
    void set_coeff(const Exponents& e, const FieldElement& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly neg() const;
    MultiPoly scale(const FieldElement& c) const;
    MultiPoly pow(unsigned n) const;
    MultiPoly monic() const; // divide by grlex leading coefficient
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Re-expression over a superset of the variables (sorted).
    MultiPoly with_vars(const std::vector<std::string>& target) const;
    MultiPoly drop_unused_vars() const;
    MultiPoly rename_var(const std::string& from, const std::string& to) const;
    static std::vector<std::string> var_union(const MultiPoly& a, const MultiPoly& b);

    // Composition; unassigned variables map to themselves.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& assignment) const;
    FieldElement evaluate(const std::map<std::string, FieldElement>& point) const;

    // j-th Hasse derivative in var: D^j(x^n) = C(n,j) x^(n-j) with the
    // binomial reduced into the coefficient field. j = 1 is the formal
    // derivative.
    MultiPoly hasse_derivative(const std::string& var, unsigned j) const;
    MultiPoly derivative(const std::string& var) const { return hasse_derivative(var, 1); }

    // Canonical form: graded-lex descending term order.
    std::string to_string() const;

private:
    FieldPtr dom_;
    std::vector<std::string> vars_;
    TermMap terms_;

    size_t var_index(const std::string& var) const; // npos if absent
    void insert_term(const Exponents& e, const FieldElement& c);
    friend std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b);
};

std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b);

// Exact multivariate division: p / q if the quotient is polynomial.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& q);

// Monic-normalized (grlex leading coefficient 1) greatest common divisor.
// Univariate reduces to a remainder sequence over the field; multivariate
// goes through Gauss content/primitive recursion on the last variable with
// a subresultant PRS for the primitive parts.
MultiPoly gcd(const MultiPoly& p, const MultiPoly& q);

// A polynomial reorganized as Sum coeffs[i] * main_var^i with coefficients
// in the remaining variables. Leading (highest index) coefficient nonzero.
struct MainVarView {
    std::string main_var;
    FieldPtr dom;
    std::vector<std::string> coeff_vars;
    std::vector<MultiPoly> coeffs;

    static MainVarView of(const MultiPoly& p, const std::string& var);
    static MainVarView from_coeffs(const FieldPtr& dom, const std::string& var,
                                   std::vector<MultiPoly> coeffs);
    MultiPoly assemble() const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const MultiPoly& leading() const;
    bool is_zero() const { return coeffs.empty(); }
};

struct DivRemResult {
    MultiPoly quotient;
    MultiPoly remainder;
    bool exact;       // remainder == 0 and quotient polynomial
    MultiPoly scale;  // identity satisfied: scale * p = q * quotient + remainder
};

// Division in the main variable. When every coefficient division stays in
// the ring (always the case for a unit leading coefficient) scale is 1 and
// p = q * quotient + remainder with deg remainder < deg q. Otherwise falls
// back to pseudo-division and reports the scale factor.
DivRemResult divrem_in_var(const MainVarView& p, const MainVarView& q);

// Gauss decomposition: p = content * primitive, content = gcd of the
// coefficient list. Throws ZeroPolynomial.
std::pair<MultiPoly, MainVarView> content_and_primitive(const MainVarView& p);
bool is_primitive_in(const MainVarView& p);

// unit * Prod parts[i].first ^ parts[i].second == input; factors monic,
// square-free, pairwise coprime; multiplicities strictly increasing.
struct SquareFreeDecomposition {
    FieldElement unit;
    std::vector<std::pair<MultiPoly, unsigned>> parts;
    MultiPoly reassemble() const;
};

// Univariate only. In characteristic p, p-th power layers are unwound via
// coefficientwise Frobenius roots. Throws ConstantInput.
SquareFreeDecomposition squarefree_decompose(const MultiPoly& p);

// Product of the multiplicity-one irreducible factors, monic-normalized;
// computed as s / gcd(s, g) with g = gcd(p, all partials), s = p / g.
// Refuses char-p inputs containing a p-th power factor (CharPInseparable).
MultiPoly multiplicity_one_part(const MultiPoly& p);

// Number of simple roots in the algebraic closure = degree of the
// multiplicity-one part (the coefficient fields here are perfect).
int simple_root_count(const MultiPoly& p);

} // namespace polycert

#endif
