#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace arrpi {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses `p`, `-p` or `p/q` with decimal integers. Throws InputError.
Rational parse_rational(std::string_view text);

/// Inverse of parse_rational: `p` when the denominator is 1, otherwise `p/q`.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

}  // namespace arrpi
