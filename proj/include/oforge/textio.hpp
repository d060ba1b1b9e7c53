#ifndef OFORGE_TEXTIO_HPP
#define OFORGE_TEXTIO_HPP

#include <stdexcept>
#include <string>

#include "oforge/polynomial.hpp"

namespace oforge {

/// Parse failure with 0-based character position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

/// Canonical text form: terms in graded-lex descending order joined by
/// " + " / " - ", rational coefficient then "*" then the monomial, "^" for
/// powers. Examples: "x11*x22 - x12*x21", "3/2*a^2*c", "0".
std::string to_text(const Polynomial& p);

/// Inverse of to_text over the given ambient; also accepts redundant
/// whitespace, a leading sign, and coefficients placed between factors.
Polynomial parse_polynomial(const std::string& text, const AmbientPtr& amb);

}  // namespace oforge

#endif
