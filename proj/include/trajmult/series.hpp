#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "trajmult/poly.hpp"
#include "trajmult/rational.hpp"

namespace trajmult {

/// Univariate power series in t known exactly through t^exact_to().
///
/// Arithmetic never overstates exactness: a result is exact only to the minimum order of its operands
/// (one less for the derivative).
class TruncSeries {
public:
    /// The constant 0, exact to order 0.
    TruncSeries() : coeffs_(1) {}
    /// `coeffs` must be nonempty; exact_to() becomes `coeffs.size() - 1`.
    explicit TruncSeries(std::vector<Rational> coeffs);

    static TruncSeries constant(const Rational& value, std::size_t exact_to);
    /// The series `value + t`.
    static TruncSeries time(std::size_t exact_to, const Rational& value = 0);

    std::size_t exact_to() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    TruncSeries truncated(std::size_t exact_to) const;
    TruncSeries derivative() const;
    /// Index of the first nonzero coefficient, or nullopt if all known coefficients vanish.
    std::optional<std::size_t> order_of_vanishing() const;

    TruncSeries& operator+=(const TruncSeries& other);
    TruncSeries& operator-=(const TruncSeries& other);
    TruncSeries& operator*=(const Rational& factor);

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// Coefficients 0..order of P(s_1(t), ..., s_n(t)), by Horner evaluation over the truncated series ring.
/// Every input series must be exact to at least `order`; the result is exact to exactly `order`.
TruncSeries compose_with_series(const MultiPoly& p, std::span<const TruncSeries> series, std::size_t order);

}  // namespace trajmult
