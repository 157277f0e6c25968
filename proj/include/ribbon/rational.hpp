#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ribbon {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// "p/q" with q > 1, plain "p" for integers. Always normalized, sign on p.
std::string to_string(const Rational& r);

// Accepts "p" or "p/q" with optional leading sign; throws InvalidGraphJson
// on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

inline Integer numerator(const Rational& r) {
    return boost::multiprecision::numerator(r);
}
inline Integer denominator(const Rational& r) {
    return boost::multiprecision::denominator(r);
}

bool is_integer(const Rational& r);

// Exact conversion helpers used by the metric-graph code.
double to_double(const Rational& r);
long long to_long_long(const Integer& n);

} // namespace ribbon
