#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mixlab {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den. Throws InvalidArgument on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den);

/// "num/den" in lowest terms, always with an explicit denominator ("0/1", "1/1").
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "num/den", "num" or a plain integer literal with optional sign.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

Rational abs(const Rational& q);
BigInt floor_div(const Rational& q);

BigInt pow(const BigInt& base, unsigned long exponent);

/// Checked narrowing; throws Guard when the value does not fit.
std::int64_t to_int64(const BigInt& z);
std::uint64_t to_uint64(const BigInt& z);

}  // namespace mixlab
