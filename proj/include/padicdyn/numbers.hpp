#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "padicdyn/errors.hpp"

namespace padicdyn {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRat& q) { return boost::multiprecision::denominator(q); }

/// Parse "a" or "a/b" (decimal digits, optional leading minus on a).
/// Throws ParseError on anything else, including b == 0.
BigRat parse_rational(const std::string& text);

/// Canonical rendering: "a" when the denominator is 1, else "a/b".
std::string rational_to_string(const BigRat& q);

/// p-adic valuation of a rational. nullopt encodes +infinity (x == 0).
std::optional<BigInt> vp(const BigRat& x, const BigInt& p);

/// Multiplicity of p in a nonzero integer (0 if coprime).
BigInt int_valuation(BigInt n, const BigInt& p);

/// Inverse of a mod m for gcd(a, m) == 1; throws DivisionByZero otherwise.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

/// Deterministic Miller-Rabin for any size (probabilistic above 64 bits,
/// with fixed witnesses so results are reproducible).
bool is_prime(const BigInt& n);

/// Smallest integer >= q.
BigInt ceil_rat(const BigRat& q);

/// Smallest integer > q.
BigInt floor_rat_plus_one(const BigRat& q);

}  // namespace padicdyn
