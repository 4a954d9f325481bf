#include "polycert/parse.hpp"

#include <cctype>

namespace polycert {

FieldPtr parse_field_spec(const std::string& spec, uint64_t extension_bound) {
    if (spec == "Q") return rationals();
    auto starts = [&](const std::string& prefix) {
        return spec.rfind(prefix, 0) == 0;
    };
    try {
        if (starts("Fpk:")) {
            size_t second = spec.find(':', 4);
            if (second == std::string::npos) throw UnknownField("bad field spec: " + spec);
            uint64_t p = std::stoull(spec.substr(4, second - 4));
            unsigned k = static_cast<unsigned>(std::stoul(spec.substr(second + 1)));
            return make_extension_field(p, k, extension_bound);
        }
        if (starts("Fp:")) {
            uint64_t p = std::stoull(spec.substr(3));
            return prime_field(p);
        }
    } catch (const std::invalid_argument&) {
        throw UnknownField("bad field spec: " + spec);
    } catch (const std::out_of_range&) {
        throw UnknownField("bad field spec: " + spec);
    }
    throw UnknownField("unknown field spec: " + spec + " (expected Q, Fp:<p>, Fpk:<p>:<k>)");
}

namespace {

struct Parser {
    const std::string& src;
    size_t pos = 0;
    FieldPtr field;
    bool allow_reserved;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    mpz_class read_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) throw SyntaxError("expected an integer", start);
        return mpz_class(src.substr(start, pos - start), 10);
    }

    MultiPoly number() {
        size_t at = pos;
        mpz_class num = read_integer();
        if (peek() == '/') {
            ++pos;
            size_t dat = pos;
            mpz_class den = read_integer();
            if (den == 0) throw SyntaxError("zero denominator in rational literal", dat);
            if (field->kind != DomainKind::Rational)
                throw SyntaxError("rational literal over a finite field", at);
            mpq_class q(num, den);
            q.canonicalize();
            return MultiPoly::constant(field, FieldElement::from_rational(field, q));
        }
        return MultiPoly::constant(field, FieldElement::from_int(field, num));
    }

    MultiPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos;
            MultiPoly e = expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (c >= 'a' && c <= 'z') {
            size_t start = pos;
            ++pos;
            while (pos < src.size() &&
                   (std::islower(static_cast<unsigned char>(src[pos])) ||
                    std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                ++pos;
            std::string name = src.substr(start, pos - start);
            if (!allow_reserved && (name == "u" || name == "v"))
                throw ReservedVariable("variable name '" + name +
                                       "' is reserved for internal coordinates");
            return MultiPoly::variable(field, name);
        }
        throw SyntaxError("expected a number, variable or '('", pos);
    }

    MultiPoly power() {
        MultiPoly base = primary();
        while (peek() == '^') {
            ++pos;
            size_t at = pos;
            bool negexp = eat('-');
            mpz_class e = read_integer();
            if (negexp || e < 0) throw SyntaxError("negative exponent", at);
            if (!e.fits_uint_p()) throw SyntaxError("exponent too large", at);
            base = base.pow(e.get_ui());
        }
        return base;
    }

    MultiPoly unary() {
        if (peek() == '-') {
            ++pos;
            return unary().neg();
        }
        return power();
    }

    MultiPoly term() {
        MultiPoly t = unary();
        while (peek() == '*') {
            ++pos;
            t = t * unary();
        }
        // Implicit multiplication like "2x" stays a syntax error: the next
        // token must be an operator, ')' or end of input.
        char c = peek();
        if (c != '\0' && c != '+' && c != '-' && c != '*' && c != ')' && c != '^' && c != '/')
            throw SyntaxError("unexpected token (implicit multiplication is not allowed)", pos);
        return t;
    }

    MultiPoly expr() {
        MultiPoly e = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                e = e + term();
            } else if (c == '-') {
                ++pos;
                e = e - term();
            } else {
                break;
            }
        }
        return e;
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, const FieldPtr& field, bool allow_reserved) {
    Parser p{text, 0, field, allow_reserved};
    MultiPoly result = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw SyntaxError("trailing input", p.pos);
    return result;
}

} // namespace polycert
