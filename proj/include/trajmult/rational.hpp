#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace trajmult {

using Integer = mpz_class;
/// Exact rational; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses `a` or `a/b` with an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

/// `a` for integers, `a/b` otherwise. Never uses a decimal point.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer factorial(unsigned long k);

}  // namespace trajmult
