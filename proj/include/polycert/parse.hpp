#ifndef POLYCERT_PARSE_HPP
#define POLYCERT_PARSE_HPP

#include <string>

#include "polycert/multipoly.hpp"

namespace polycert {

// Field specs: "Q", "Fp:<p>", "Fpk:<p>:<k>". Throws UnknownField.
FieldPtr parse_field_spec(const std::string& spec, uint64_t extension_bound = 64);

// Grammar: integer / rational literals (-3, 3/4), variables [a-z][a-z0-9_]*,
// operators + - * ^, parentheses. Implicit multiplication is a syntax error.
// The internal coordinate names u and v are rejected unless allow_reserved.
// parse(print(p)) == p under the canonical graded-lex printer.
MultiPoly parse_poly(const std::string& text, const FieldPtr& field, bool allow_reserved = false);

} // namespace polycert

#endif
