#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace triso {

using Integer = mpz_class;
/// Canonical rational: gmpxx keeps results of arithmetic reduced with a
/// positive denominator; values built from parts go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q" (optional leading '-'); throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// 2^k for any integer k.
Rational pow2(long k);

/// Smallest power of two that is >= x (x > 0).
Rational pow2_ceil(const Rational& x);

Rational pow(const Rational& base, unsigned long exp);

}  // namespace triso
