#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nnscf {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "7", "-7", "7/4", "-7/4"; throws parse_error otherwise.
Rational parse_rational(const std::string& text);

// Lowest terms, "a" when the denominator is 1, otherwise "a/b" with b > 0.
std::string rational_to_string(const Rational& r);

Int int_pow(const Int& base, std::uint64_t exp);

}  // namespace nnscf
