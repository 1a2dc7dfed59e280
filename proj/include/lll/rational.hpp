#pragma once

#include <gmpxx.h>

#include <string>

namespace lll {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (positive denominator, lowest terms) through every operation, which is the
// invariant the rest of the library relies on; all construction from raw
// parts goes through the helpers below so un-canonicalized values never
// escape.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Accepts "a/b" (integers, b > 0) or a plain decimal string ("0.125", "-3"),
// parsed exactly. Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

// "num/den", or just "num" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

// Decimal approximation, for display only.
std::string to_decimal_string(const Rational& r, int significant_digits = 12);

}  // namespace lll
