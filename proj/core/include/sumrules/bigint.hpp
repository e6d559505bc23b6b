#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <map>
#include <string>

namespace sumrules {

/// Arbitrary-precision nonnegative integer. Nonnegativity is a contract of
/// the producing function, not enforced by the type.
using Nat = mpz_class;

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Arbitrary-precision rational; gmpxx keeps it canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rat = mpq_class;

/// 113-bit significand binary float used for log-domain work and residuals.
using Real = boost::multiprecision::cpp_bin_float_quad;

/// Named integer parameters of an identity or bound evaluation.
using Params = std::map<std::string, long long>;

/// num/den reduced to lowest terms. Throws std::domain_error for den = 0.
Rat ratio(const Int& num, const Int& den);

/// base^exp with the convention 0^0 = 1.
Int power(long base, unsigned long exp);

/// Exact decimal rendering, never scientific notation.
std::string to_decimal(const Int& value);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_decimal(const Rat& value);

/// Parses an optionally signed decimal integer; throws UsageError otherwise.
Int parse_int(const std::string& text);

/// Nearest Real to an exact integer or rational.
Real to_real(const Int& value);
Real to_real(const Rat& value);

}  // namespace sumrules
