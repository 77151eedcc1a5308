#include "sqchoose/rational.hpp"

#include "sqchoose/errors.hpp"

#include <charconv>

namespace sqchoose {

std::string to_string(const Rational& r)
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole)
{
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw PreconditionError("not a rational: '" + whole + "'");
    }
    return value;
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    std::string_view s(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(s, text));
    }
    auto den = parse_int(s.substr(slash + 1), text);
    if (den == 0) {
        throw PreconditionError("zero denominator: '" + text + "'");
    }
    return Rational(parse_int(s.substr(0, slash), text), den);
}

}  // namespace sqchoose
