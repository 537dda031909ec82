#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace biregular {

// Arbitrary-precision rational. gmpxx keeps results canonical (reduced,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q" and "-p/q". Throws InvalidInput on malformed text or a
// zero denominator.
Rational parse_rational(std::string_view text);

// num/den in canonical form; the two-argument mpq_class constructor does not
// reduce. Throws InvalidInput on a zero denominator.
Rational ratio(long num, long den);

// Always "num/den", e.g. "3/1".
std::string to_fraction_string(const Rational& q);

// Truncated decimal expansion with `digits` fractional digits.
std::string to_decimal(const Rational& q, int digits);

Integer factorial(unsigned n);
Integer binomial(long n, long k);  // 0 when k < 0 or k > n

// 2^-bits as a rational.
Rational pow2_neg(unsigned bits);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace biregular
