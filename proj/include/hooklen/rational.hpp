#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hooklen {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Reduced "p/q" form: optional '-', decimal numerator, '/', positive
/// decimal denominator. Integers keep the "/1" suffix.
std::string to_fraction_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p". The result is canonicalized, so
/// unreduced input such as "2/4" is read as 1/2. Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_fraction(std::string_view text);

BigInt factorial(std::size_t n);
BigInt binomial(std::size_t n, std::size_t k);
BigInt pow2(std::size_t exponent);

}  // namespace hooklen
