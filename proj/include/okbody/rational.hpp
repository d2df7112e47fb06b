#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace okbody {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Parses "p", "-p", "p/q". The result is canonical (gcd 1, positive
// denominator). Throws ValidationError on malformed text or q = 0.
BigRational parse_rational(std::string_view text);

// Canonical "p/q" text, or "p" when the denominator is 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

inline double to_double(const BigRational& q) { return q.get_d(); }

BigRational make_rational(const BigInt& num, const BigInt& den);

BigInt floor(const BigRational& q);
BigInt ceil(const BigRational& q);

// Throws ResourceError when z does not fit into int64.
std::int64_t to_int64(const BigInt& z);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);
BigRational pow(const BigRational& base, unsigned exponent);

} // namespace okbody
