#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace peakfn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k), zero outside 0 <= k <= n.
Integer binomial(long n, long k);

Integer pow2(unsigned e);

// "12", "-3", "7/2"
std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

Rational parse_rational(const std::string& text);

}  // namespace peakfn
