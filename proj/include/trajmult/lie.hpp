#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "trajmult/poly.hpp"

namespace trajmult {

/// Polynomial vector field xi_1 d/dx_1 + ... + xi_n d/dx_n.
class PolyVectorField {
public:
    /// All components must share the same variable count, which must equal the component count.
    explicit PolyVectorField(std::vector<MultiPoly> components);
    static PolyVectorField zero(std::size_t nvars);

    std::size_t nvars() const noexcept { return components_.size(); }
    const std::vector<MultiPoly>& components() const noexcept { return components_; }
    const MultiPoly& operator[](std::size_t i) const { return components_.at(i); }

    /// Maximal total degree of the components, recomputed from them; 0 for the zero field.
    unsigned coeff_degree() const;
    bool is_zero() const;
    std::vector<Rational> evaluate(std::span<const Rational> point) const;
    bool vanishes_at(std::span<const Rational> point) const;

    PolyVectorField operator-() const;
    PolyVectorField operator+(const PolyVectorField& other) const;
    PolyVectorField scaled(const Rational& factor) const;
    friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

private:
    std::vector<MultiPoly> components_;
};

/// xi P = sum_i xi_i dP/dx_i.
MultiPoly lie_derivative(const PolyVectorField& xi, const MultiPoly& p);

/// [P, xi P, xi^2 P, ..., xi^kmax P].
std::vector<MultiPoly> iterated_lie_chain(const PolyVectorField& xi, const MultiPoly& p, std::size_t kmax);

/// Lazily extended chain xi^k P; entries are computed once and kept.
class LieChain {
public:
    LieChain(PolyVectorField xi, MultiPoly p);

    /// xi^k P, extending the cache as needed.
    const MultiPoly& at(std::size_t k);
    std::size_t computed() const noexcept { return chain_.size(); }
    const PolyVectorField& field() const noexcept { return xi_; }

private:
    PolyVectorField xi_;
    std::vector<MultiPoly> chain_;
};

/// [a, b] with components a(b_i) - b(a_i).
PolyVectorField lie_bracket(const PolyVectorField& a, const PolyVectorField& b);

}  // namespace trajmult
