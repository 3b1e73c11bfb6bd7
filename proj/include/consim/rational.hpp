#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace consim {

// Exact arbitrary-precision rational scalar. boost keeps the value canonical:
// lowest terms, denominator > 0, zero stored as 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

// "p/q" in lowest terms with positive q, e.g. "0/1", "-3/2".
std::string rational_to_string(const Rational& r);

// Accepts "p/q" or a bare integer "p"; the sign may sit on either part and the
// value is renormalized. Throws ParseError on malformed text or q = 0.
Rational parse_rational(const std::string& text);

}  // namespace consim
