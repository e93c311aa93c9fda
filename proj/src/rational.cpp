#include "linembed/rational.hpp"

#include <cctype>

namespace linembed {

namespace {

bool valid_integer(std::string_view s, bool allow_sign)
{
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer to_integer(std::string_view s)
{
    if (s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer(text, true)) throw ParseError("malformed rational '" + std::string(text) + "'");
        return Rational(to_integer(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    const Integer d = to_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(to_integer(num), d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q)
{
    Rational r = q;
    r.canonicalize();
    return r.get_str(10);
}

} // namespace linembed
