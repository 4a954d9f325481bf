#include "polycert/transform.hpp"

namespace polycert {

TriangularMap TriangularMap::shear_x() { return {Kind::ShearX, {}}; }

TriangularMap TriangularMap::slide_y(const MultiPoly& f) {
    for (const auto& v : f.vars())
        if (v != "x" && f.degree(v) > 0)
            throw DomainMismatch("slide-y expects a univariate polynomial in x, got " + f.to_string());
    return {Kind::SlideY, f};
}

std::string TriangularMap::describe() const {
    if (kind == Kind::ShearX) return "shear-x";
    return "slide-y(" + slide.to_string() + ")";
}

MultiPoly TriangularMap::u_of_xy(const FieldPtr& dom) const {
    MultiPoly x = MultiPoly::variable(dom, "x");
    MultiPoly y = MultiPoly::variable(dom, "y");
    if (kind == Kind::ShearX) return x - y;
    return y - slide;
}

MultiPoly TriangularMap::v_of_xy(const FieldPtr& dom) const {
    if (kind == Kind::ShearX) return MultiPoly::variable(dom, "y");
    return MultiPoly::variable(dom, "x");
}

std::map<std::string, MultiPoly> TriangularMap::inverse_assignment(const FieldPtr& dom) const {
    MultiPoly u = MultiPoly::variable(dom, kCoordU);
    MultiPoly v = MultiPoly::variable(dom, kCoordV);
    if (kind == Kind::ShearX) {
        // x = u + v, y = v
        return {{"x", u + v}, {"y", v}};
    }
    // x = v, y = u + f(v)
    MultiPoly fv = slide.substitute({{"x", v}});
    return {{"x", v}, {"y", u + fv}};
}

MainVarView rewrite_in_uv(const MultiPoly& F, const TriangularMap& phi) {
    for (const auto& w : F.vars())
        if (w != "x" && w != "y" && F.degree(w) > 0)
            throw DomainMismatch("coordinate rewrite expects a polynomial in x,y");
    MultiPoly tilde = F.substitute(phi.inverse_assignment(F.domain()));
    return MainVarView::of(tilde.with_vars({kCoordU, kCoordV}), kCoordV);
}

std::map<std::string, MultiPoly> invert_map(const TriangularMap& phi, const FieldPtr& dom) {
    // Sends u,v back to their (x,y) images, undoing rewrite_in_uv.
    return {{kCoordU, phi.u_of_xy(dom)}, {kCoordV, phi.v_of_xy(dom)}};
}

} // namespace polycert
