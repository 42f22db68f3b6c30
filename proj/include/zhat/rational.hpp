#pragma once

// Exact integer and rational scalars.
//
// BigInt and BigRational are GMP's mpz_class / mpq_class. Every BigRational
// produced by this library is canonical: gcd(num, den) = 1 and den > 0.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace zhat {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Canonical num/den. Throws std::domain_error on a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);
BigRational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "a", "-a" or "a/b".
BigRational parse_rational(std::string_view text);

/// "a" for integers, otherwise "a/b".
std::string to_string(const BigRational& r);
std::string to_string(const BigInt& z);

/// Largest integer <= r.
BigInt floor(const BigRational& r);
/// Smallest integer >= r.
BigInt ceil(const BigRational& r);

bool is_integer(const BigRational& r);

/// Narrowing conversion; throws std::overflow_error if the value does not fit.
std::int64_t to_int64(const BigInt& z);

/// Binomial coefficient C(n, k) for n >= 0; zero when k < 0 or k > n.
/// Throws std::invalid_argument for negative n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Non-negative residue of a modulo m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace zhat
