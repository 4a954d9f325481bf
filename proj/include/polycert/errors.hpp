#ifndef POLYCERT_ERRORS_HPP
#define POLYCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polycert {

struct DomainMismatch : std::runtime_error {
    explicit DomainMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct NotPrime : std::runtime_error {
    explicit NotPrime(const std::string& what) : std::runtime_error(what) {}
};

struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroPolynomial : std::runtime_error {
    explicit ZeroPolynomial(const std::string& what) : std::runtime_error(what) {}
};

struct ConstantInput : std::runtime_error {
    explicit ConstantInput(const std::string& what) : std::runtime_error(what) {}
};

// Positive characteristic input has a factor q^p; multiplicity analysis via
// gcd-with-derivatives is refused for these.
struct CharPInseparable : std::runtime_error {
    explicit CharPInseparable(const std::string& what) : std::runtime_error(what) {}
};

struct CharPositiveUnsupported : std::runtime_error {
    explicit CharPositiveUnsupported(const std::string& what) : std::runtime_error(what) {}
};

struct MissingNHIPCertificate : std::runtime_error {
    explicit MissingNHIPCertificate(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateReduction : std::runtime_error {
    explicit DegenerateReduction(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateFamily : std::runtime_error {
    explicit DegenerateFamily(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedDomain : std::runtime_error {
    explicit UnsupportedDomain(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NoAdmissiblePrime : std::runtime_error {
    explicit NoAdmissiblePrime(const std::string& what) : std::runtime_error(what) {}
};

struct SyntaxError : std::runtime_error {
    size_t position;
    SyntaxError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownField : std::runtime_error {
    explicit UnknownField(const std::string& what) : std::runtime_error(what) {}
};

struct ReservedVariable : std::runtime_error {
    explicit ReservedVariable(const std::string& what) : std::runtime_error(what) {}
};

} // namespace polycert

#endif
