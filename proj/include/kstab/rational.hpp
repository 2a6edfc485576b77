#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace kstab {

// Expression templates are disabled: the fused evaluation paths of
// rational_adaptor miscompute under optimization, and exactness matters more
// than the saved temporaries.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Serialized form is "p/q", or just "p" when q == 1.
std::string to_string(const Rational& x);

// Parses "p/q" or "p" with optional sign. Throws std::invalid_argument on
// malformed input or zero denominator. No float syntax is accepted.
Rational parse_rational(const std::string& s);

inline bool is_integer(const Rational& x) {
    return boost::multiprecision::denominator(x) == 1;
}

// Fixed-point decimal rendering with the given number of fractional digits,
// rounding half away from zero. Used only for SVG/plot output.
std::string decimal_string(const Rational& x, int digits);

}  // namespace kstab
