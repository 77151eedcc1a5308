#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace sqchoose {

using Rational = boost::rational<std::int64_t>;

/// Always `p/q`, including integers (`2/1`).
std::string to_string(const Rational& r);

/// Accepts `p/q` or a bare integer.
Rational parse_rational(const std::string& text);

}  // namespace sqchoose
