#pragma once

#include <cstddef>
#include <vector>

#include "trajmult/nonholonomy.hpp"
#include "trajmult/trajectory.hpp"

namespace trajmult {

/// Functions f_1..f_m of x_1..x_n with df_i/dx_j = g_ij(x, f), presented by the g_ij and the germ
/// values f(0). All polynomials are over the n + m variables (x_1..x_n, f_1..f_m).
/// Integrability of the system is not checked.
class NoetherianChain {
public:
    /// `g` is m rows of n entries. m = 0 is allowed and degenerates to plain polynomial problems.
    NoetherianChain(std::size_t n, std::vector<std::vector<MultiPoly>> g, std::vector<Rational> f0);

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return g_.size(); }
    std::size_t nvars() const noexcept { return n_ + m(); }
    const MultiPoly& g(std::size_t i, std::size_t j) const { return g_.at(i).at(j); }
    const std::vector<Rational>& f0() const noexcept { return f0_; }
    /// Maximal degree of the g_ij (0 if all are constant).
    unsigned alpha() const;
    /// (0, ..., 0, f0).
    std::vector<Rational> basepoint() const;

private:
    std::size_t n_;
    std::vector<std::vector<MultiPoly>> g_;
    std::vector<Rational> f0_;
};

/// Vector field sum_j Q_j(x, f) d/dx_j with Noetherian coefficients.
struct NoetherianField {
    NoetherianChain chain;
    std::vector<MultiPoly> q;

    /// Maximal degree of the Q_j.
    unsigned degree() const;
};

/// Polynomial field on (x, f): dx_j/dt = Q_j, df_i/dt = sum_j g_ij Q_j.
PolyVectorField lift_field(const NoetherianField& nf);

/// Each coefficient row lifted as in lift_field.
VectorFieldSystem lift_system(const NoetherianChain& chain, const std::vector<std::vector<MultiPoly>>& qs);

/// Multiplicity bound for psi along the lifted trajectory with p' = max(deg psi, n + m - 1),
/// q' = max(deg Q, 1), alpha' = max(alpha, 1).
Integer noetherian_certification_bound(const MultiPoly& psi, const NoetherianField& nf);

/// Multiplicity at 0 of psi(x, f(x)) restricted to the trajectory of the field through 0.
/// Throws PreconditionError if the lifted field vanishes at (0, f0).
MultiplicityResult noetherian_multiplicity(const MultiPoly& psi, const NoetherianField& nf,
                                           const MultiplicityOptions& options = {});

/// Degree of nonholonomy of the lifted system at (0, f0), certified against the Noetherian bound.
NonholonomyResult noetherian_nonholonomy(const NoetherianChain& chain,
                                         const std::vector<std::vector<MultiPoly>>& qs, std::size_t max_order);

}  // namespace trajmult
