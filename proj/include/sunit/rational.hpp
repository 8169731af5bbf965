#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sunit {

// Arbitrary-precision integers and rationals. mpq_class keeps every value in
// lowest terms with a positive denominator, which is what the coefficient
// comparisons throughout the library rely on.
using Integer = mpz_class;
using Rational = mpq_class;

// k!
Integer factorial(unsigned long k);

// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned long k);

// Generalized binomial coefficient with rational top argument,
//   binom(t, k) = t (t-1) ... (t-k+1) / k!,  binom(t, 0) = 1.
Rational gen_binomial(const Rational& top, unsigned long k);

// Exact integer power; negative exponents invert (division by zero throws).
Rational rational_pow(const Rational& base, long exponent);

// Exact decimal-literal parser: "0.834" -> 417/500, "-2.5e1" -> -25.
// Throws std::invalid_argument on malformed input.
Rational rational_from_decimal(const std::string& text);

// "p/q", or just "p" when q == 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace sunit
