#pragma once

#include <gmpxx.h>

#include <string>

namespace fgl {

// Exact arithmetic throughout: arbitrary-precision rationals, always canonical
// (gcd(num, den) = 1, den > 0).  mpq_class keeps results of arithmetic
// canonical; the helpers below canonicalize on construction and parsing.
using Rational = mpq_class;
using Integer = mpz_class;

/// canonicalized num/den
Rational ratio(long num, long den = 1);

/// parse "num" or "num/den"; throws std::invalid_argument on malformed input
Rational rational_from_string(const std::string& s);

/// "num" when den == 1, else "num/den"
std::string rational_to_string(const Rational& q);

/// p-adic valuation of a nonzero integer
int valuation(const Integer& n, long p);

/// p-adic valuation of a nonzero rational: v(num) - v(den)
int valuation(const Rational& q, long p);

Integer int_pow(long base, int exp);
Integer factorial(long n);

/// exact binomial coefficient C(n, k), 0 <= k <= n
Integer binomial(long n, long k);

} // namespace fgl
