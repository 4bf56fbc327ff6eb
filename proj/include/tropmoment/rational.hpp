#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tropmoment {

// GMP rationals are kept in canonical form (reduced, positive denominator) by
// every arithmetic operation; values built from raw numerator/denominator
// pairs go through make_rational() which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

Rational make_rational(const Integer& numerator, const Integer& denominator);

// Accepts "p/q" or "p" with an optional leading sign. Decimal and exponent
// notations are rejected so that every input is an exact rational.
Rational parse_rational(std::string_view text);

// Comma separated list of rationals, e.g. "1/3,1/7".
RationalVector parse_rational_list(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);
Rational frac(const Rational& value);  // value - floor(value), in [0, 1)
double to_double(const Rational& value);

Rational dot(std::span<const Rational> x, std::span<const Rational> y);

}  // namespace tropmoment
