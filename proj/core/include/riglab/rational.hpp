#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace riglab {

/// Arbitrary-precision rational. Values are kept canonical
/// (coprime numerator/denominator, positive denominator).
using Rational = mpq_class;

/// Builds a canonical rational from a numerator/denominator pair.
Rational make_rational(long num, long den = 1);

/// Exact conversion of a (finite) double to a rational.
Rational rational_from_double(double x);

/// Splits a natural number as n = s^2 * d with d square-free.
/// Returns {s, d}; square_free_split(0) = {0, 0}.
std::pair<unsigned long, unsigned long> square_free_split(unsigned long n);

/// Parses "p" or "p/q" (decimal digits, optional leading '-', q > 0).
Rational parse_rational(const std::string& text);

/// Renders canonical "p" or "p/q" text.
std::string rational_to_string(const Rational& q);

} // namespace riglab
