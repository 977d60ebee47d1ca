#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trajmult/lie.hpp"
#include "trajmult/poly.hpp"
#include "trajmult/series.hpp"

namespace trajmult {

/// Initial value problem whose trajectory gamma passes through the basepoint at t = 0.
///
/// Autonomous: dx/dt = xi(x), polynomials over the n state variables.
/// Rational:   S_i(x, t) dx_i/dt = Q_i(x, t), polynomials over (x_1, ..., x_n, t); t is the last variable.
class ODESystem {
public:
    /// Throws PreconditionError if xi(x0) = 0.
    static ODESystem autonomous(PolyVectorField field, std::vector<Rational> basepoint);
    /// Throws PreconditionError if some S_i(x0, 0) = 0.
    static ODESystem rational(std::vector<MultiPoly> s, std::vector<MultiPoly> q, std::vector<Rational> basepoint);

    bool is_autonomous() const noexcept { return autonomous_; }
    /// Number of state variables n.
    std::size_t dimension() const noexcept { return basepoint_.size(); }
    /// Variables a polynomial restricted to the trajectory lives over: n, or n + 1 with t appended.
    std::size_t curve_nvars() const noexcept { return autonomous_ ? dimension() : dimension() + 1; }
    const std::vector<Rational>& basepoint() const noexcept { return basepoint_; }

    const PolyVectorField& field() const;  // autonomous only
    const std::vector<MultiPoly>& s() const noexcept { return s_; }
    const std::vector<MultiPoly>& q() const noexcept { return q_; }

    /// A polynomial field over curve_nvars() variables whose trajectory through curve_basepoint() has the
    /// same image as gamma near t = 0. For autonomous systems this is the field itself; for rational
    /// systems it is (Q_1 prod_{j!=1} S_j, ..., Q_n prod_{j!=n} S_j, prod_j S_j), a reparametrization
    /// by the unit prod_j S_j.
    PolyVectorField polynomial_field() const;
    /// Basepoint in curve variables: x0, or (x0, 0).
    std::vector<Rational> curve_basepoint() const;

private:
    ODESystem() = default;

    bool autonomous_ = true;
    std::optional<PolyVectorField> field_;
    std::vector<MultiPoly> s_;
    std::vector<MultiPoly> q_;
    std::vector<Rational> basepoint_;
};

/// Exact Taylor coefficients 0..order of the n state components of the trajectory.
///
/// Coefficients are produced one order at a time. With u = dx/dt,
///   autonomous: u_k = [t^k] xi(x(t))
///   rational:   u_k = ([t^k] Q(x(t), t) - sum_{j=1}^{k} [t^j] S(x(t), t) u_{k-j}) / S(x0, 0)
/// and x_{k+1} = u_k / (k + 1). Coefficient k of xi(x(t)), S or Q depends only on x_0..x_k, so every
/// returned coefficient is final.
std::vector<TruncSeries> expand_trajectory(const ODESystem& sys, std::size_t order);

/// The state series followed by the series of t itself for rational systems; one series per curve variable.
std::vector<TruncSeries> curve_series(const ODESystem& sys, std::size_t order);

/// Per equation: dx_i/dt - xi_i(x(t)) (autonomous) or S_i dx_i/dt - Q_i (rational), exact to order - 1.
/// Requires order >= 1.
std::vector<TruncSeries> ode_residual(const ODESystem& sys, std::span<const TruncSeries> state, std::size_t order);

enum class MultiplicityStatus { Finite, IdenticallyZero, Inconclusive };

/// Which route produced a result.
enum class MultiplicityMethod { SeriesComposition, LieChain, CrossChecked };

/// Which route(s) to run.
enum class MethodChoice { Series, Lie, Both };

struct MultiplicityResult {
    MultiplicityStatus status = MultiplicityStatus::Inconclusive;
    /// Finite: mu. Inconclusive: highest Taylor order checked. IdenticallyZero: highest order checked
    /// (0 when certified by an identically vanishing Lie derivative).
    std::size_t order = 0;
    MultiplicityMethod method = MultiplicityMethod::SeriesComposition;
    /// Certification threshold B: mu <= B whenever P is not identically zero on gamma.
    std::optional<Integer> bound_used;
    /// IdenticallyZero only: some xi^k P was the zero polynomial.
    bool early_exit = false;
    /// Taylor coefficients of P along gamma that were computed, starting at t^0.
    std::vector<Rational> series_prefix;

    std::size_t mu() const;  // throws unless Finite
};

/// Same status and bound, and the same order unless IdenticallyZero. Methods and prefixes may differ.
bool same_outcome(const MultiplicityResult& a, const MultiplicityResult& b);

struct MultiplicityOptions {
    MethodChoice method = MethodChoice::Both;
    /// Highest Taylor order examined unless `certify` is set.
    std::size_t cap = 512;
    /// Examine through the certification bound regardless of cap (fails if it does not fit in memory).
    bool certify = false;
    /// Replaces the default certification bound (used for lifted Noetherian problems).
    std::optional<Integer> bound_override;
};

/// Default certification bound for P on sys: the multiplicity bound evaluated at the effective degrees
/// p' = max(deg P, N - 1), q' = max(deg field, 1) over the N curve variables of polynomial_field().
/// Degrees are raised because the bound holds for all polynomials of degree "not exceeding" p', q'.
Integer certification_bound(const MultiPoly& p, const ODESystem& sys);

/// mu from the first nonzero Taylor coefficient of P(x(t)).
MultiplicityResult multiplicity_series(const MultiPoly& p, const ODESystem& sys,
                                       const MultiplicityOptions& options = {});

/// mu = min { k : (xi^k P)(x0) != 0 }, using polynomial_field() for rational systems.
MultiplicityResult multiplicity_lie(const MultiPoly& p, const PolyVectorField& xi, std::span<const Rational> x0,
                                    const MultiplicityOptions& options = {});
MultiplicityResult multiplicity_lie(const MultiPoly& p, const ODESystem& sys, const MultiplicityOptions& options = {});

/// Dispatches on options.method. With Both, runs the two routes and throws InconsistencyError unless
/// they agree; an Inconclusive result is accepted against a decisive one that does not contradict it.
MultiplicityResult multiplicity(const MultiPoly& p, const ODESystem& sys, const MultiplicityOptions& options = {});

std::string_view to_string(MultiplicityStatus status);
std::string_view to_string(MultiplicityMethod method);
std::string_view to_string(MethodChoice method);
MethodChoice parse_method_choice(std::string_view text);

}  // namespace trajmult
