#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gvkit {

// Exact arbitrary-precision integers and rationals. Rationals are kept
// canonical (reduced, positive denominator) by mpq.
using BigInt = mpz_class;
using Rational = mpq_class;

/// base^e with exact integer arithmetic.
BigInt big_pow(const BigInt& base, unsigned long e);

/// q^e as a BigInt for machine-word q.
BigInt big_pow(unsigned long q, unsigned long e);

/// Binomial coefficient C(n, k), exact. Memoized per n; safe to call
/// concurrently.
BigInt binomial(unsigned long n, unsigned long k);

/// n!, exact.
BigInt factorial(unsigned long n);

/// Floor of the integer square root. Requires x >= 0.
BigInt isqrt(const BigInt& x);

/// Smallest integer >= r.
BigInt ceil_of(const Rational& r);

Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "num", "num/den" or a plain decimal like "0.25".
Rational parse_rational(const std::string& s);

/// "num/den" (or just "num" for integers).
std::string rational_string(const Rational& r);

/// Non-normative decimal rendering with the given number of significant
/// digits (default 12, per the report format).
std::string decimal_string(const Rational& r, int significant_digits = 12);

}  // namespace gvkit
