#include "bpfo/rational.hpp"

#include <cctype>

namespace bpfo {

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_token(text))
            throw ParseError("not a rational: '" + std::string(text) + "'");
        return Rational(Integer(std::string(text)));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("not a rational: '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d <= 0)
        throw ParseError("denominator must be positive in '" + std::string(text) + "'");
    return Rational(Integer(std::string(num)), d);
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_pow(const Rational& r, long n) {
    if (n < 0)
        return rational_inv(rational_pow(r, -n));
    Rational acc(1), base = r;
    unsigned long e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1)
            acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace bpfo
