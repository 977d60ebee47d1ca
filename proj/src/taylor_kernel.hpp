#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "trajmult/poly.hpp"

namespace trajmult::detail {

/// Online Taylor-coefficient evaluation of several polynomials along a curve whose coefficients are
/// discovered one order at a time.
///
/// Every monomial is a node `parent * x_j` where parent has one degree less, so coefficient k of a
/// node only needs coefficients 0..k of its parent and of x_j. After `advance()` has been called k+1
/// times, coefficients 0..k of every polynomial are final.
class TaylorKernel {
public:
    TaylorKernel(std::span<const MultiPoly> polys, std::size_t nvars);

    /// `curve[v]` must hold at least `order() + 1` coefficients. Computes coefficient `order()` of
    /// every polynomial and increments `order()`.
    void advance(std::span<const std::vector<Rational>> curve);

    std::size_t order() const noexcept { return order_; }
    /// Coefficient k (< order()) of polynomial `poly` along the curve.
    const Rational& coefficient(std::size_t poly, std::size_t k) const { return values_[poly][k]; }

private:
    struct Node {
        std::ptrdiff_t parent;  // -1: the constant monomial 1
        std::size_t var;
        std::vector<Rational> coeffs;
    };
    struct PolyTerm {
        std::ptrdiff_t node;  // -1: constant term
        Rational coefficient;
    };

    std::ptrdiff_t node_for(const Exponents& e);

    std::size_t nvars_;
    std::size_t order_ = 0;
    std::vector<Node> nodes_;
    std::vector<Exponents> node_keys_;
    std::vector<std::vector<PolyTerm>> polys_;
    std::vector<std::vector<Rational>> values_;
};

}  // namespace trajmult::detail
