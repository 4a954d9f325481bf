#ifndef POLYCERT_CRITERIA_HPP
#define POLYCERT_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycert/multipoly.hpp"
#include "polycert/transform.hpp"

namespace polycert {

enum class CriterionId {
    Eisenstein,
    PropAbsIrred,
    NhipUnivariate,
    HipMain,
    HipComposed,
    GenEisenstein,
    NearSeparated,
    CorAuto,
    MignotteA,
    MignotteB,
};

enum class Conclusion { Irreducible, AbsolutelyIrreducible, Hip, Nhip };

std::string criterion_name(CriterionId id);
std::string conclusion_name(Conclusion c);

// Machine-checkable certificate. inputs/witnesses hold canonical-printed
// polynomials and scalar values; replay_certificate re-derives every stated
// condition from them. A certificate never claims more than its criterion's
// conclusion; none of the criteria ever concludes "reducible".
struct Certificate {
    CriterionId id;
    Conclusion conclusion;
    FieldPtr field;
    nlohmann::json inputs;
    nlohmann::json witnesses;

    nlohmann::json to_json() const;
    static Certificate from_json(const nlohmann::json& j, uint64_t extension_bound = 64);
};

// Certificate, or a definite "hypotheses not satisfied" with the failing
// condition named. All criteria are sufficient conditions only.
struct CheckOutcome {
    std::optional<Certificate> certificate;
    std::string reason;

    bool ok() const { return certificate.has_value(); }
    static CheckOutcome pass(Certificate c) { return {std::move(c), {}}; }
    static CheckOutcome fail(std::string why) { return {std::nullopt, std::move(why)}; }
};

// Eisenstein for a prime q of the coefficient ring, in either orientation:
// classic (q | f_i for i < d, q not| f_d, q^2 not| f_0) or reversed
// (q | f_i for i >= 1, q not| f_0, q^2 not| f_d). q's irreducibility is the
// caller's responsibility (cross-check it with the oracle when feasible).
CheckOutcome eisenstein(const MainVarView& P, const MultiPoly& q);

// p = a(x_)c(x_,y) + b(x_) absolutely irreducible when p is primitive in y,
// gcd(a, c_d b) = 1 and a has an irreducible factor of multiplicity one.
CheckOutcome check_prop_abs_irred(const MultiPoly& a, const MainVarView& c, const MultiPoly& b);

// Sufficient NHIP route: characteristic zero and >= 2 simple roots.
// Throws CharPositiveUnsupported over finite fields.
CheckOutcome certify_nhip(const MultiPoly& a);

// a(x)c(x,y)+b(x) is HIP: char 0, primitive, gcd(a, c_d b) = 1, a with at
// least two simple roots. Throws CharPositiveUnsupported over finite fields.
CheckOutcome certify_hip(const MultiPoly& a, const MainVarView& c, const MultiPoly& b);

// Iterated construction: an NHIP- or HIP-certified a lifts to a HIP
// polynomial a*c + b in one more variable. Throws MissingNHIPCertificate.
CheckOutcome build_hip_from_nhip(const Certificate& base, const MainVarView& c,
                                 const MultiPoly& b);

// Rewrite F through the automorphism and apply Eisenstein with prime u:
// F~ = u Q(u,v) + r(u) primitive, u not| p_d, r(0) != 0.
CheckOutcome check_generalized_eisenstein(const MultiPoly& F, const TriangularMap& phi);

// F = f1(x)f2(y) - f2(x)f1(y) + r, r != 0: absolutely irreducible in char 0,
// and in char p when p does not divide d1 - d2 after the equal-degree
// reduction f1 <- f1 - (lc1/lc2) f2. Throws DegenerateReduction.
CheckOutcome check_near_separated(const MultiPoly& f1, const MultiPoly& f2,
                                  const FieldElement& r);

// F = (y - f(x)) H(x,y) + r: absolutely irreducible when the top-weight
// coefficient sum S = Sum_{i in M} a_{i,d_i} (f_{d_f})^i is nonzero.
CheckOutcome check_cor_auto(const MainVarView& H, const MultiPoly& f, const FieldElement& r);

// F = h(x) Prod (y - f_i(x)) + g(x), h with a simple root, gcd(h, g) = 1.
CheckOutcome check_mignotte_a(const MultiPoly& h, const MultiPoly& g,
                              const std::vector<MultiPoly>& f_list);

// F = h(x) Prod (y - f_i(x)) + r, r != 0, all f_n - f_i nonconstant.
CheckOutcome check_mignotte_b(const std::vector<MultiPoly>& f_list, const MultiPoly& h,
                              const FieldElement& r);

// Re-derives the certificate's conditions and witnesses from its recorded
// inputs; true iff everything matches.
bool replay_certificate(const Certificate& cert);

} // namespace polycert

#endif
