#pragma once

// Exact scalar policy. Every algebraic routine in the library works over
// arbitrary-precision rationals; floating point only appears in the numeric
// reconstruction path.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spm {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" form with q > 0 and gcd(p, q) = 1. The denominator is
/// always written, including q = 1.
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact square root when the value is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& value);

Rational power(const Rational& base, unsigned exponent);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

/// Scales a coefficient list to integers with content 1. Returns the factor
/// that was applied. The sign is left untouched.
Rational scale_to_primitive(std::vector<Rational>& coefficients);

}  // namespace spm
