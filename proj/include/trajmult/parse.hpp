#pragma once

#include <span>
#include <string>
#include <string_view>

#include "trajmult/poly.hpp"

namespace trajmult {

/// Parses a polynomial expression over the named variables.
///
/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | name | '(' expr ')'
///
/// Division is only allowed by a nonzero constant, so `1/2*x` and `x^2/2` both work.
/// Throws ParseError (with the offending offset) on syntax errors, unknown names,
/// negative exponents and division by a non-constant or zero.
MultiPoly parse_polynomial(std::string_view text, std::span<const std::string> vars);

/// Canonical text form: terms in graded-lex descending order, coefficients as `a` or `a/b`.
/// `parse_polynomial(format_polynomial(p, vars), vars) == p` for every p.
std::string format_polynomial(const MultiPoly& p, std::span<const std::string> vars);

}  // namespace trajmult
