#ifndef POLYCERT_TRANSFORM_HPP
#define POLYCERT_TRANSFORM_HPP

#include <map>
#include <string>

#include "polycert/multipoly.hpp"

namespace polycert {

// Internal coordinate names; user polynomials must not use them.
inline const std::string kCoordU = "u";
inline const std::string kCoordV = "v";

// Triangular (de Jonquieres-type) automorphisms of K[x,y]. Two families:
//   ShearX : u = x - y,    v = y
//   SlideY : u = y - f(x), v = x
// Both are invertible with polynomial inverse.
struct TriangularMap {
    enum class Kind { ShearX, SlideY };
    Kind kind;
    MultiPoly slide; // univariate in x; only for SlideY

    static TriangularMap shear_x();
    static TriangularMap slide_y(const MultiPoly& f);

    std::string describe() const;

    // Forward images u(x,y), v(x,y).
    MultiPoly u_of_xy(const FieldPtr& dom) const;
    MultiPoly v_of_xy(const FieldPtr& dom) const;
    // Inverse coordinate assignment {x -> ..., y -> ...} in terms of u, v.
    std::map<std::string, MultiPoly> inverse_assignment(const FieldPtr& dom) const;
};

// F(x,y) rewritten in the coordinates (u,v), returned with main variable v
// over K[u]. substitute(result, forward images) reproduces F exactly.
MainVarView rewrite_in_uv(const MultiPoly& F, const TriangularMap& phi);

// Substitution map sending a (u,v)-polynomial back to (x,y).
std::map<std::string, MultiPoly> invert_map(const TriangularMap& phi, const FieldPtr& dom);

} // namespace polycert

#endif
