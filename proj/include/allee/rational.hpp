#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace allee {

using Integer = mpz_class;

/// Exact rational scalar. gmpxx keeps every arithmetic result in lowest
/// terms with a positive denominator; values built from raw parts must go
/// through make_rational().
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q" or "p". Decimal notation is rejected.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

int sign(const Rational& q);
int sign(const Integer& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Rational with the smallest denominator (then smallest magnitude) strictly
/// inside the open interval (lo, hi). Requires lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Outward rounding onto the dyadic grid 2^-bits.
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);

/// Decimal rendering with `digits` digits after the point (truncated toward
/// zero). Display only.
std::string to_decimal(const Rational& q, int digits);

double to_double(const Rational& q);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace allee
