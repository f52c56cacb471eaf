#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symcan {

// mpq_class keeps values canonical (lowest terms, positive denominator) after
// every arithmetic operation, which is the invariant the rest of the code
// relies on.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q" with q != 0. Throws Error(Parse) otherwise.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational abs_value(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

// Integer power with non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace symcan
