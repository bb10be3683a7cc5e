#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rigidity {

// Canonical exact rational: gcd(num, den) = 1, den > 0, zero is 0/1.
// mpq_class keeps that form after every arithmetic operation.
using Rational = mpq_class;

// Accepts "p", "-p", "p/q" with decimal integers and q != 0.
// The result is canonicalized. Throws Error(Parse) otherwise.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace rigidity
