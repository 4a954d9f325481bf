#include "polycert/criteria.hpp"

#include <algorithm>

#include "polycert/parse.hpp"

namespace polycert {

using nlohmann::json;

std::string criterion_name(CriterionId id) {
    switch (id) {
        case CriterionId::Eisenstein: return "eisenstein";
        case CriterionId::PropAbsIrred: return "prop-abs-irred";
        case CriterionId::NhipUnivariate: return "nhip-univariate";
        case CriterionId::HipMain: return "hip-main";
        case CriterionId::HipComposed: return "hip-composed";
        case CriterionId::GenEisenstein: return "gen-eisenstein";
        case CriterionId::NearSeparated: return "near-separated";
        case CriterionId::CorAuto: return "cor-auto";
        case CriterionId::MignotteA: return "mignotte-a";
        case CriterionId::MignotteB: return "mignotte-b";
    }
    return "?";
}

std::string conclusion_name(Conclusion c) {
    switch (c) {
        case Conclusion::Irreducible: return "irreducible";
        case Conclusion::AbsolutelyIrreducible: return "absolutely-irreducible";
        case Conclusion::Hip: return "HIP";
        case Conclusion::Nhip: return "NHIP";
    }
    return "?";
}

namespace {

CriterionId criterion_from_name(const std::string& s) {
    for (CriterionId id :
         {CriterionId::Eisenstein, CriterionId::PropAbsIrred, CriterionId::NhipUnivariate,
          CriterionId::HipMain, CriterionId::HipComposed, CriterionId::GenEisenstein,
          CriterionId::NearSeparated, CriterionId::CorAuto, CriterionId::MignotteA,
          CriterionId::MignotteB})
        if (criterion_name(id) == s) return id;
    throw UnknownField("unknown criterion: " + s);
}

Conclusion conclusion_from_name(const std::string& s) {
    for (Conclusion c : {Conclusion::Irreducible, Conclusion::AbsolutelyIrreducible,
                         Conclusion::Hip, Conclusion::Nhip})
        if (conclusion_name(c) == s) return c;
    throw UnknownField("unknown conclusion: " + s);
}

bool divides(const MultiPoly& d, const MultiPoly& p) {
    if (p.is_zero()) return true;
    return divide_exact(p, d).has_value();
}

json sqf_to_json(const SquareFreeDecomposition& d) {
    json parts = json::array();
    for (const auto& [f, m] : d.parts)
        parts.push_back({{"factor", f.to_string()}, {"multiplicity", m}});
    return {{"unit", d.unit.to_string()}, {"parts", parts}};
}

json phi_to_json(const TriangularMap& phi) {
    if (phi.kind == TriangularMap::Kind::ShearX) return {{"kind", "shear-x"}};
    return {{"kind", "slide-y"}, {"f", phi.slide.to_string()}};
}

TriangularMap phi_from_json(const json& j, const FieldPtr& field) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "shear-x") return TriangularMap::shear_x();
    return TriangularMap::slide_y(parse_poly(j.at("f").get<std::string>(), field));
}

Certificate make_cert(CriterionId id, Conclusion con, const FieldPtr& field, json inputs,
                      json witnesses) {
    return Certificate{id, con, field, std::move(inputs), std::move(witnesses)};
}

// Shared machinery for Prop. abs-irred / HIP-main / HIP-composed: builds
// p = a*c + b and evaluates the primitivity + gcd hypotheses.
struct CompositeShape {
    MultiPoly p;
    MultiPoly cdb; // c_d * b
    MultiPoly g;   // gcd(a, c_d*b)
    std::string failure;
};

CompositeShape composite_hypotheses(const MultiPoly& a, const MainVarView& c,
                                    const MultiPoly& b) {
    CompositeShape out;
    if (c.is_zero() || c.degree() < 1) {
        out.failure = "c must be nonzero and involve the main variable " + c.main_var;
        return out;
    }
    if (a.is_zero()) {
        out.failure = "a must be nonzero";
        return out;
    }
    if (a.degree(c.main_var) > 0 || b.degree(c.main_var) > 0) {
        out.failure = "a and b must not involve the main variable " + c.main_var;
        return out;
    }
    out.p = a * c.assemble() + b;
    MainVarView pv = MainVarView::of(out.p, c.main_var);
    if (!is_primitive_in(pv)) {
        out.failure = "p = a*c + b is not primitive in " + c.main_var;
        return out;
    }
    out.cdb = c.leading() * b;
    out.g = gcd(a, out.cdb);
    if (!out.g.is_constant()) {
        out.failure = "gcd(a, c_d*b) = " + out.g.to_string() + " is not a unit";
        return out;
    }
    return out;
}

} // namespace

json Certificate::to_json() const {
    return {{"criterion", criterion_name(id)},
            {"conclusion", conclusion_name(conclusion)},
            {"field", field->name()},
            {"inputs", inputs},
            {"witnesses", witnesses}};
}

Certificate Certificate::from_json(const json& j, uint64_t extension_bound) {
    Certificate c;
    c.id = criterion_from_name(j.at("criterion").get<std::string>());
    c.conclusion = conclusion_from_name(j.at("conclusion").get<std::string>());
    c.field = parse_field_spec(j.at("field").get<std::string>(), extension_bound);
    c.inputs = j.at("inputs");
    c.witnesses = j.at("witnesses");
    return c;
}

CheckOutcome eisenstein(const MainVarView& P, const MultiPoly& q) {
    if (P.is_zero() || P.degree() < 1)
        return CheckOutcome::fail("polynomial must be nonconstant in " + P.main_var);
    if (q.is_constant()) return CheckOutcome::fail("prime element must be nonconstant");
    if (!is_primitive_in(P))
        return CheckOutcome::fail("not primitive in " + P.main_var);
    size_t d = static_cast<size_t>(P.degree());
    MultiPoly q2 = q * q;

    auto try_orientation = [&](bool reversed) -> std::string {
        // reversed: q | f_i (i>=1), q not| f_0, q^2 not| f_d
        // classic:  q | f_i (i<d),  q not| f_d, q^2 not| f_0
        const MultiPoly& nondiv = reversed ? P.coeffs[0] : P.coeffs[d];
        const MultiPoly& sqfree = reversed ? P.coeffs[d] : P.coeffs[0];
        for (size_t i = 0; i <= d; ++i) {
            if ((reversed && i == 0) || (!reversed && i == d)) continue;
            if (!divides(q, P.coeffs[i]))
                return "q does not divide the coefficient of degree " + std::to_string(i);
        }
        if (divides(q, nondiv))
            return std::string("q divides the ") + (reversed ? "constant" : "leading") +
                   " coefficient";
        if (divides(q2, sqfree))
            return std::string("q^2 divides the ") + (reversed ? "leading" : "constant") +
                   " coefficient";
        return {};
    };

    std::string classic_fail = try_orientation(false);
    std::string reversed_fail = classic_fail.empty() ? "" : try_orientation(true);
    if (!classic_fail.empty() && !reversed_fail.empty())
        return CheckOutcome::fail("classic orientation: " + classic_fail +
                                  "; reversed orientation: " + reversed_fail);
    bool reversed = !classic_fail.empty();
    json inputs = {{"p", P.assemble().to_string()},
                   {"main_var", P.main_var},
                   {"q", q.to_string()}};
    json witnesses = {{"orientation", reversed ? "reversed" : "classic"},
                      {"prime", q.to_string()},
                      {"degree", d}};
    return CheckOutcome::pass(
        make_cert(CriterionId::Eisenstein, Conclusion::Irreducible, P.dom, inputs, witnesses));
}

CheckOutcome check_prop_abs_irred(const MultiPoly& a, const MainVarView& c,
                                  const MultiPoly& b) {
    CompositeShape shape = composite_hypotheses(a, c, b);
    if (!shape.failure.empty()) return CheckOutcome::fail(shape.failure);
    if (a.is_constant())
        return CheckOutcome::fail("a is constant; no irreducible factor of multiplicity one");
    MultiPoly m1 = multiplicity_one_part(a); // may throw CharPInseparable
    if (m1.is_constant())
        return CheckOutcome::fail("a has no irreducible factor of multiplicity one");
    json inputs = {{"a", a.to_string()},
                   {"c", c.assemble().to_string()},
                   {"main_var", c.main_var},
                   {"b", b.to_string()},
                   {"certified", shape.p.to_string()}};
    json witnesses = {{"p", shape.p.to_string()},
                      {"multiplicity_one_part", m1.to_string()},
                      {"gcd_of", shape.cdb.to_string()},
                      {"gcd_value", shape.g.to_string()}};
    return CheckOutcome::pass(make_cert(CriterionId::PropAbsIrred,
                                        Conclusion::AbsolutelyIrreducible, a.domain(), inputs,
                                        witnesses));
}

CheckOutcome certify_nhip(const MultiPoly& a) {
    if (a.domain()->characteristic() != 0)
        throw CharPositiveUnsupported(
            "NHIP certification via simple roots holds in characteristic zero only");
    int n = simple_root_count(a); // throws ConstantInput for constants
    if (n < 2)
        return CheckOutcome::fail("only " + std::to_string(n) +
                                  " simple root(s); at least two required");
    json inputs = {{"a", a.to_string()}, {"certified", a.to_string()}};
    json witnesses = {{"simple_root_count", n},
                      {"squarefree", sqf_to_json(squarefree_decompose(a))}};
    return CheckOutcome::pass(
        make_cert(CriterionId::NhipUnivariate, Conclusion::Nhip, a.domain(), inputs, witnesses));
}

CheckOutcome certify_hip(const MultiPoly& a, const MainVarView& c, const MultiPoly& b) {
    if (a.domain()->characteristic() != 0)
        throw CharPositiveUnsupported(
            "the HIP theorem fails in positive characteristic; refusing");
    CompositeShape shape = composite_hypotheses(a, c, b);
    if (!shape.failure.empty()) return CheckOutcome::fail(shape.failure);
    if (a.is_constant()) return CheckOutcome::fail("a must be nonconstant");
    int n = simple_root_count(a);
    if (n < 2)
        return CheckOutcome::fail("a has " + std::to_string(n) +
                                  " simple root(s); at least two required");
    json inputs = {{"a", a.to_string()},
                   {"c", c.assemble().to_string()},
                   {"main_var", c.main_var},
                   {"b", b.to_string()},
                   {"certified", shape.p.to_string()}};
    json witnesses = {{"p", shape.p.to_string()},
                      {"simple_root_count", n},
                      {"squarefree", sqf_to_json(squarefree_decompose(a))},
                      {"gcd_of", shape.cdb.to_string()},
                      {"gcd_value", shape.g.to_string()}};
    return CheckOutcome::pass(
        make_cert(CriterionId::HipMain, Conclusion::Hip, a.domain(), inputs, witnesses));
}

CheckOutcome build_hip_from_nhip(const Certificate& base, const MainVarView& c,
                                 const MultiPoly& b) {
    if (base.conclusion != Conclusion::Nhip && base.conclusion != Conclusion::Hip)
        throw MissingNHIPCertificate("base certificate concludes " +
                                     conclusion_name(base.conclusion) +
                                     ", need NHIP (or HIP, which implies it)");
    MultiPoly a =
        parse_poly(base.inputs.at("certified").get<std::string>(), base.field, true);
    CompositeShape shape = composite_hypotheses(a, c, b);
    if (!shape.failure.empty()) return CheckOutcome::fail(shape.failure);
    json inputs = {{"a", a.to_string()},
                   {"c", c.assemble().to_string()},
                   {"main_var", c.main_var},
                   {"b", b.to_string()},
                   {"certified", shape.p.to_string()},
                   {"base", base.to_json()}};
    json witnesses = {{"p", shape.p.to_string()},
                      {"base_criterion", criterion_name(base.id)},
                      {"gcd_of", shape.cdb.to_string()},
                      {"gcd_value", shape.g.to_string()}};
    return CheckOutcome::pass(
        make_cert(CriterionId::HipComposed, Conclusion::Hip, a.domain(), inputs, witnesses));
}

CheckOutcome check_generalized_eisenstein(const MultiPoly& F, const TriangularMap& phi) {
    MainVarView tilde = rewrite_in_uv(F, phi); // main var v over K[u]
    const FieldPtr& dom = F.domain();
    if (tilde.is_zero()) return CheckOutcome::fail("F is zero");
    int d = tilde.degree();
    if (d < 1) return CheckOutcome::fail("rewritten polynomial has no v terms");
    if (!is_primitive_in(tilde))
        return CheckOutcome::fail("rewritten polynomial is not primitive in K[u][v]");
    MultiPoly u = MultiPoly::variable(dom, kCoordU);
    // r(0) != 0, i.e. the v-free coefficient has nonzero constant term
    FieldElement r0 = tilde.coeffs[0].coeff(Exponents(tilde.coeffs[0].vars().size(), 0));
    if (r0.is_zero()) return CheckOutcome::fail("r(0) = 0");
    for (int j = 1; j <= d; ++j) {
        if (!divides(u, tilde.coeffs[static_cast<size_t>(j)]))
            return CheckOutcome::fail("u does not divide the coefficient of v^" +
                                      std::to_string(j));
    }
    MultiPoly pd = *divide_exact(tilde.coeffs[static_cast<size_t>(d)], u);
    if (divides(u, pd)) return CheckOutcome::fail("u divides p_d(u)");
    json inputs = {{"F", F.to_string()}, {"phi", phi_to_json(phi)}};
    json witnesses = {{"rewritten", tilde.assemble().to_string()},
                      {"p_d", pd.to_string()},
                      {"r0", r0.to_string()},
                      {"v_degree", d}};
    return CheckOutcome::pass(make_cert(CriterionId::GenEisenstein,
                                        Conclusion::AbsolutelyIrreducible, dom, inputs,
                                        witnesses));
}

namespace {

std::string poly_single_var(const MultiPoly& p) {
    std::string v;
    for (const auto& w : p.vars())
        if (p.degree(w) > 0) {
            if (!v.empty()) return {};
            v = w;
        }
    return v;
}

} // namespace

CheckOutcome check_near_separated(const MultiPoly& f1_in, const MultiPoly& f2_in,
                                  const FieldElement& r) {
    if (r.is_zero()) return CheckOutcome::fail("r must be nonzero");
    if (f1_in.is_constant() || f2_in.is_constant())
        return CheckOutcome::fail("f1 and f2 must be nonconstant");
    if (f1_in == f2_in) return CheckOutcome::fail("f1 and f2 must be distinct");
    std::string v1 = poly_single_var(f1_in), v2 = poly_single_var(f2_in);
    if (v1.empty() || v2.empty() || v1 != v2)
        return CheckOutcome::fail("f1 and f2 must be univariate in the same variable");
    const std::string var = v1;
    const FieldPtr& dom = f1_in.domain();

    // Equal degrees leave F unchanged under f1 <- f1 - (lc1/lc2) f2.
    MultiPoly f1 = f1_in, f2 = f2_in;
    while (!f1.is_zero() && !f2.is_zero() && f1.degree(var) == f2.degree(var)) {
        FieldElement ratio = f1.leading_coeff() / f2.leading_coeff();
        f1 = f1 - f2.scale(ratio);
    }
    if (f1.degree(var) > f2.degree(var)) std::swap(f1, f2);
    if (f1.is_constant())
        throw DegenerateReduction(
            "degree reduction drove one polynomial constant; the theorem's hypotheses "
            "cannot be established for this pair");
    int d1 = f1.degree(var), d2 = f2.degree(var);
    uint64_t ch = dom->characteristic();
    long diff = d2 - d1;
    if (ch > 0 && diff % static_cast<long>(ch) == 0)
        return CheckOutcome::fail("characteristic " + std::to_string(ch) + " divides d1-d2 = " +
                                  std::to_string(diff));
    FieldElement wronskian_lc = FieldElement::from_int(dom, diff) *
                                f1.leading_coeff() * f2.leading_coeff();
    json inputs = {{"f1", f1_in.to_string()}, {"f2", f2_in.to_string()}, {"r", r.to_string()}};
    json witnesses = {{"reduced_f1", f1.to_string()},
                      {"reduced_f2", f2.to_string()},
                      {"d1", d1},
                      {"d2", d2},
                      {"wronskian_leading_coeff", wronskian_lc.to_string()}};
    return CheckOutcome::pass(make_cert(CriterionId::NearSeparated,
                                        Conclusion::AbsolutelyIrreducible, dom, inputs,
                                        witnesses));
}

CheckOutcome check_cor_auto(const MainVarView& H, const MultiPoly& f, const FieldElement& r) {
    if (H.is_zero()) throw ZeroPolynomial("H must be nonzero");
    if (r.is_zero()) return CheckOutcome::fail("r must be nonzero");
    for (const auto& w : f.vars())
        if (w != "x" && f.degree(w) > 0)
            return CheckOutcome::fail("f must be univariate in x");
    const FieldPtr& dom = H.dom;
    int df = std::max(f.degree("x"), 0);
    FieldElement fdf = f.is_zero() ? FieldElement::zero(dom) : f.leading_coeff();
    long m = -1;
    for (size_t i = 0; i < H.coeffs.size(); ++i) {
        if (H.coeffs[i].is_zero()) continue;
        long w = H.coeffs[i].degree("x") + static_cast<long>(i) * df;
        m = std::max(m, w);
    }
    std::vector<size_t> M;
    FieldElement S = FieldElement::zero(dom);
    for (size_t i = 0; i < H.coeffs.size(); ++i) {
        if (H.coeffs[i].is_zero()) continue;
        long di = H.coeffs[i].degree("x");
        if (di + static_cast<long>(i) * df != m) continue;
        M.push_back(i);
        // a_{i,d_i}: leading x-coefficient of a_i(x)
        MainVarView ai = MainVarView::of(H.coeffs[i], "x");
        FieldElement aidi = ai.coeffs.back().constant_value();
        S = S + aidi * fdf.pow(static_cast<long>(i));
    }
    if (S.is_zero())
        return CheckOutcome::fail("top-weight coefficient sum S vanishes");
    MultiPoly y = MultiPoly::variable(dom, "y");
    MultiPoly F = (y - f) * H.assemble() + MultiPoly::constant(dom, r);
    json inputs = {{"H", H.assemble().to_string()},
                   {"main_var", H.main_var},
                   {"f", f.to_string()},
                   {"r", r.to_string()}};
    json witnesses = {{"F", F.to_string()},
                      {"m", m},
                      {"M", M},
                      {"S", S.to_string()}};
    return CheckOutcome::pass(make_cert(CriterionId::CorAuto,
                                        Conclusion::AbsolutelyIrreducible, dom, inputs,
                                        witnesses));
}

namespace {

std::string distinctness_failure(const std::vector<MultiPoly>& f_list) {
    if (f_list.empty()) return "f-list must be nonempty";
    for (size_t i = 0; i < f_list.size(); ++i)
        for (size_t j = i + 1; j < f_list.size(); ++j)
            if (f_list[i] == f_list[j]) return "f-list entries must be pairwise distinct";
    int total = 0;
    for (const auto& f : f_list) total += std::max(f.degree("x"), 0);
    if (total <= 0) return "sum of deg f_i must be positive";
    return {};
}

MultiPoly product_shape(const std::vector<MultiPoly>& f_list, const FieldPtr& dom) {
    MultiPoly y = MultiPoly::variable(dom, "y");
    MultiPoly prod = MultiPoly::constant(dom, 1);
    for (const auto& f : f_list) prod = prod * (y - f);
    return prod;
}

json f_list_json(const std::vector<MultiPoly>& f_list) {
    json a = json::array();
    for (const auto& f : f_list) a.push_back(f.to_string());
    return a;
}

} // namespace

CheckOutcome check_mignotte_a(const MultiPoly& h, const MultiPoly& g,
                              const std::vector<MultiPoly>& f_list) {
    std::string bad = distinctness_failure(f_list);
    if (!bad.empty()) return CheckOutcome::fail(bad);
    MultiPoly prod = product_shape(f_list, h.domain());
    CheckOutcome inner = check_prop_abs_irred(h, MainVarView::of(prod, "y"), g);
    if (!inner.ok()) return inner;
    json inputs = {{"h", h.to_string()}, {"g", g.to_string()}, {"f_list", f_list_json(f_list)}};
    json witnesses = inner.certificate->witnesses;
    witnesses["simple_root_count_h"] = simple_root_count(h);
    witnesses["delegate"] = criterion_name(CriterionId::PropAbsIrred);
    return CheckOutcome::pass(make_cert(CriterionId::MignotteA,
                                        Conclusion::AbsolutelyIrreducible, h.domain(), inputs,
                                        witnesses));
}

CheckOutcome check_mignotte_b(const std::vector<MultiPoly>& f_list, const MultiPoly& h,
                              const FieldElement& r) {
    if (r.is_zero()) return CheckOutcome::fail("r must be nonzero");
    if (h.is_zero()) return CheckOutcome::fail("h must be nonzero");
    std::string bad = distinctness_failure(f_list);
    if (!bad.empty()) return CheckOutcome::fail(bad);
    const MultiPoly& fn = f_list.back();
    for (size_t i = 0; i + 1 < f_list.size(); ++i)
        if ((fn - f_list[i]).is_constant())
            return CheckOutcome::fail("f_n - f_" + std::to_string(i + 1) + " is constant");
    const FieldPtr& dom = h.domain();
    MultiPoly F = h * product_shape(f_list, dom) + MultiPoly::constant(dom, r);
    json inputs = {{"f_list", f_list_json(f_list)}, {"h", h.to_string()}, {"r", r.to_string()}};

    CheckOutcome inner;
    std::string delegate;
    if (f_list.size() == 1 && h.is_constant()) {
        // F = c (y - f_1) + r is linear in y; the u-Eisenstein route has no
        // v-dependence left, but the top-weight sum argument applies.
        inner = check_cor_auto(MainVarView::of(h, "y"), fn, r);
        delegate = criterion_name(CriterionId::CorAuto);
    } else {
        inner = check_generalized_eisenstein(F, TriangularMap::slide_y(fn));
        delegate = criterion_name(CriterionId::GenEisenstein);
    }
    if (!inner.ok()) return inner;
    json witnesses = inner.certificate->witnesses;
    witnesses["F"] = F.to_string();
    witnesses["delegate"] = delegate;
    return CheckOutcome::pass(make_cert(CriterionId::MignotteB,
                                        Conclusion::AbsolutelyIrreducible, dom, inputs,
                                        witnesses));
}

bool replay_certificate(const Certificate& cert) {
    try {
        const FieldPtr& field = cert.field;
        auto parse_in = [&](const char* key) {
            return parse_poly(cert.inputs.at(key).get<std::string>(), field, true);
        };
        auto scalar_in = [&](const char* key) {
            return parse_poly(cert.inputs.at(key).get<std::string>(), field, true)
                .constant_value();
        };
        CheckOutcome redo;
        switch (cert.id) {
            case CriterionId::Eisenstein:
                redo = eisenstein(
                    MainVarView::of(parse_in("p"), cert.inputs.at("main_var").get<std::string>()),
                    parse_in("q"));
                break;
            case CriterionId::PropAbsIrred:
                redo = check_prop_abs_irred(
                    parse_in("a"),
                    MainVarView::of(parse_in("c"), cert.inputs.at("main_var").get<std::string>()),
                    parse_in("b"));
                break;
            case CriterionId::NhipUnivariate:
                redo = certify_nhip(parse_in("a"));
                break;
            case CriterionId::HipMain:
                redo = certify_hip(
                    parse_in("a"),
                    MainVarView::of(parse_in("c"), cert.inputs.at("main_var").get<std::string>()),
                    parse_in("b"));
                break;
            case CriterionId::HipComposed: {
                Certificate base = Certificate::from_json(cert.inputs.at("base"));
                if (!replay_certificate(base)) return false;
                redo = build_hip_from_nhip(
                    base,
                    MainVarView::of(parse_in("c"), cert.inputs.at("main_var").get<std::string>()),
                    parse_in("b"));
                break;
            }
            case CriterionId::GenEisenstein:
                redo = check_generalized_eisenstein(parse_in("F"),
                                                    phi_from_json(cert.inputs.at("phi"), field));
                break;
            case CriterionId::NearSeparated:
                redo = check_near_separated(parse_in("f1"), parse_in("f2"), scalar_in("r"));
                break;
            case CriterionId::CorAuto:
                redo = check_cor_auto(
                    MainVarView::of(parse_in("H"), cert.inputs.at("main_var").get<std::string>()),
                    parse_in("f"), scalar_in("r"));
                break;
            case CriterionId::MignotteA: {
                std::vector<MultiPoly> fs;
                for (const auto& s : cert.inputs.at("f_list"))
                    fs.push_back(parse_poly(s.get<std::string>(), field, true));
                redo = check_mignotte_a(parse_in("h"), parse_in("g"), fs);
                break;
            }
            case CriterionId::MignotteB: {
                std::vector<MultiPoly> fs;
                for (const auto& s : cert.inputs.at("f_list"))
                    fs.push_back(parse_poly(s.get<std::string>(), field, true));
                redo = check_mignotte_b(fs, parse_in("h"), scalar_in("r"));
                break;
            }
        }
        if (!redo.ok()) return false;
        return redo.certificate->conclusion == cert.conclusion &&
               redo.certificate->witnesses == cert.witnesses;
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace polycert
