#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace kemeny {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Exact rational, always kept in lowest terms with a positive denominator
/// (mpq_class canonicalizes after every arithmetic operation).
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws PreconditionError when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

BigInt to_bigint(__int128 value);
BigInt to_bigint(std::int64_t value);

BigInt floor_of(const Rational& x);
BigInt ceil_of(const Rational& x);
bool is_integer(const Rational& x);

/// "p/q" with q > 1, or "p" for integers. Sign lives on the numerator.
std::string to_exact_string(const Rational& x);

/// Correctly rounded (ties away from zero) decimal rendering with the given
/// number of significant digits. Plain notation for exponents in [-6, 21),
/// scientific ("d.ddde+XX") otherwise.
std::string to_decimal_string(const Rational& x, int significant_digits = 12);

/// Parses "p", "p/q", or a decimal literal with optional exponent
/// ("-0.125", "6.02e+23"). Throws FormatError on malformed input.
Rational parse_rational(std::string_view text);

double to_double(const Rational& x);

}  // namespace kemeny
