#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace bellgate {

using Rational = boost::multiprecision::cpp_rational;

std::string rational_to_string(const Rational& r);           // "p/q" or "p"
Rational rational_from_string(const std::string& s);         // parses both forms

// Continued-fraction rationalization with a denominator cap; nullopt when no
// rational within tol exists under the cap.
std::optional<Rational> rationalize(double x, long max_denominator, double tol);

}  // namespace bellgate
