#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "trajmult/rational.hpp"

namespace trajmult {

using Exponents = std::vector<unsigned>;

struct Term {
    Exponents exponents;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Graded lexicographic comparison: higher total degree first, ties broken lexicographically
/// with the first variable most significant.
bool grlex_greater(const Exponents& a, const Exponents& b);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in canonical form: graded-lex descending, exponent vectors pairwise distinct,
/// no zero coefficients. Two polynomials over the same variables are equal iff their term lists are.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rational& value);
    static MultiPoly variable(std::size_t nvars, std::size_t index);
    /// Accepts terms in any order; merges duplicates and drops zeros.
    static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;

    /// nullopt for the zero polynomial.
    std::optional<unsigned> total_degree() const;
    Rational constant_term() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& factor);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// d/dx_j with 0-based j.
    MultiPoly partial_derivative(std::size_t j) const;
    Rational evaluate(std::span<const Rational> point) const;

    /// Same polynomial viewed over `nvars() + count` variables; new variables are appended.
    MultiPoly with_extra_variables(std::size_t count) const;
    /// Reorders/renames variables: variable i of this polynomial becomes variable `mapping[i]`
    /// of a polynomial over `target_nvars` variables.
    MultiPoly remap_variables(std::span<const std::size_t> mapping, std::size_t target_nvars) const;

private:
    void merge(const MultiPoly& other, bool subtract);

    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b);
MultiPoly partial_derivative(const MultiPoly& p, std::size_t j);
Rational evaluate(const MultiPoly& p, std::span<const Rational> point);

}  // namespace trajmult
