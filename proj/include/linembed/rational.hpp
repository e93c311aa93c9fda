#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace linembed {

/// Exact rational. Arithmetic results are reduced; values built from a numerator and
/// denominator are not until canonicalize() is called.
using Rational = mpq_class;
using Integer = mpz_class;

class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Accepts `p/q` or an integer, optionally signed. Rejects zero denominators.
Rational parse_rational(std::string_view text);

/// Canonical form: `p` for integers, otherwise `p/q` reduced with q > 0.
std::string format_rational(const Rational& q);

} // namespace linembed
