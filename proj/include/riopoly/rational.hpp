#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "riopoly/errors.hpp"

namespace riopoly {

// Exact rationals, eagerly normalized: lowest terms, positive denominator.
// Equality is therefore structural.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// den = 0 raises ZeroDivisor; a negative den is folded into the numerator.
Rational make_rational(Integer num, Integer den);

// Strict grammar: -?digits(/digits)?, optional surrounding whitespace.
// Malformed text raises std::invalid_argument; a zero denominator ZeroDivisor.
Rational parse_rational(std::string_view text);

// "p/q", or bare "p" when q = 1. No decimal output exists anywhere.
std::string to_string(const Rational& r);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace riopoly
