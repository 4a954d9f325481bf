#ifndef POLYCERT_DECOMPOSE_HPP
#define POLYCERT_DECOMPOSE_HPP

#include <vector>

#include "polycert/multipoly.hpp"

namespace polycert {

// One solution of F(x,y) = (y - f(x)) H(x,y) + r. Invariant: the right-hand
// side reassembles F exactly; equivalently F(x, f(x)) = r.
struct Decomposition {
    MultiPoly f;    // univariate in x
    FieldElement r;
    MultiPoly H;    // exact-division cofactor witness
};

// All decompositions of a bivariate F(x,y) with deg f >= 1 (constant f only
// with the flag). Candidate degrees run down from the divisor bound
// deg f <= deg_x b_0 (b_0 the y^0 coefficient, when nonconstant; deg_x F
// otherwise); at each level the top x-coefficient of F(x, c x^t + ...) gives
// a univariate condition on c, solved by rational-root enumeration over Q
// and by exhaustion over F_q, then the residual recurses on the lower
// coefficients. Every candidate is validated by exact division before
// emission. Output sorted by deg f, then by coefficients.
// Families f + c parameterized by an arbitrary constant (x-free residual)
// are emitted as the c = 0 representative over Q and enumerated in full
// over F_q. Throws UnsupportedDomain (not bivariate in x,y, or deg_y F < 1)
// and DegenerateFamily (F in K[y] with constant f admitted via the flag).
std::vector<Decomposition> find_decompositions(const MultiPoly& F,
                                               bool allow_constant_f = false);

// True iff substitute(F, y -> f) == r and (F - r) / (y - f) is exact with
// quotient H.
bool verify_decomposition(const MultiPoly& F, const Decomposition& d);

} // namespace polycert

#endif
