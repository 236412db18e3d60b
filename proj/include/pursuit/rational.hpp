#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pursuit {

// All probabilities and expectations are exact rationals end to end;
// floating point appears only in the fixed-point solver and the simulator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "a/b", an integer, or a plain decimal literal ("0.25"), all
// converted exactly. Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// Always "numerator/denominator", e.g. "8/1", "2/3".
std::string fraction_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace pursuit
