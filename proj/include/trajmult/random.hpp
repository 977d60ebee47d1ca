#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "trajmult/lie.hpp"
#include "trajmult/poly.hpp"

namespace trajmult {

/// Seeded generator of small random polynomials, fields and problem instances.
/// Coefficients are a/b with |a| <= max_numerator, 1 <= b <= max_denominator.
class RandomInstances {
public:
    explicit RandomInstances(std::uint64_t seed, int max_numerator = 9, int max_denominator = 9)
        : rng_(seed), max_num_(max_numerator), max_den_(max_denominator) {}

    Rational coefficient(bool nonzero = false);
    std::size_t uniform(std::size_t lo, std::size_t hi);

    /// Random polynomial of total degree <= degree with up to `max_terms` terms.
    MultiPoly poly(std::size_t nvars, unsigned degree, std::size_t max_terms = 6);
    /// Same, but with at least one term of degree exactly `degree` (so the degree is exact).
    MultiPoly poly_of_degree(std::size_t nvars, unsigned degree, std::size_t max_terms = 6);
    PolyVectorField field(std::size_t nvars, unsigned degree, std::size_t max_terms = 4);
    /// Field whose maximal component degree is exactly `degree` and which is nonzero at `point`.
    PolyVectorField field_nonvanishing_at(std::size_t nvars, unsigned degree, const std::vector<Rational>& point);

private:
    Exponents monomial(std::size_t nvars, unsigned degree);

    std::mt19937_64 rng_;
    int max_num_;
    int max_den_;
};

}  // namespace trajmult
