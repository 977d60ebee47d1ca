#include "trajmult/trajectory.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "taylor_kernel.hpp"
#include "trajmult/bounds.hpp"
#include "trajmult/error.hpp"

namespace trajmult {

namespace {

void require_nonvanishing(const PolyVectorField& xi, std::span<const Rational> x0) {
    if (x0.size() != xi.nvars()) {
        throw DimensionError("basepoint has length " + std::to_string(x0.size()) + ", field has " +
                             std::to_string(xi.nvars()) + " variables");
    }
    if (xi.vanishes_at(x0)) throw PreconditionError("requires ξ(x0) ≠ 0: the field vanishes at the basepoint");
}

/// Incremental solver: holds the curve coefficients found so far and extends them on demand.
class TrajectorySolver {
public:
    explicit TrajectorySolver(const ODESystem& sys) : sys_(sys), n_(sys.dimension()) {
        if (sys.is_autonomous()) {
            kernel_.emplace(std::span<const MultiPoly>(sys.field().components()), n_);
        } else {
            std::vector<MultiPoly> polys = sys.s();
            polys.insert(polys.end(), sys.q().begin(), sys.q().end());
            kernel_.emplace(std::span<const MultiPoly>(polys), n_ + 1);
            derivative_.resize(n_);
            s0_.reserve(n_);
            for (const auto& s : sys.s()) s0_.push_back(s.evaluate(sys.curve_basepoint()));
        }
        curve_.resize(sys.curve_nvars());
        for (std::size_t i = 0; i < n_; ++i) curve_[i].push_back(sys.basepoint()[i]);
        if (!sys.is_autonomous()) curve_[n_] = {Rational(0), Rational(1)};
    }

    /// Makes coefficients 0..order of every state component available.
    void extend_to(std::size_t order) {
        while (curve_[0].size() <= order) step();
    }

    std::vector<TruncSeries> state(std::size_t order) const {
        std::vector<TruncSeries> out;
        for (std::size_t i = 0; i < n_; ++i) {
            out.emplace_back(std::vector<Rational>(curve_[i].begin(), curve_[i].begin() + static_cast<std::ptrdiff_t>(order) + 1));
        }
        return out;
    }

private:
    // Knows x_0..x_k for all state variables; produces x_{k+1}.
    void step() {
        const std::size_t k = curve_[0].size() - 1;
        if (!sys_.is_autonomous()) {
            auto& t = curve_[n_];
            while (t.size() <= k) t.emplace_back(0);
        }
        kernel_->advance(curve_);
        const Rational divisor(static_cast<unsigned long>(k + 1));
        for (std::size_t i = 0; i < n_; ++i) {
            Rational u;
            if (sys_.is_autonomous()) {
                u = kernel_->coefficient(i, k);
            } else {
                // S_i u = Q_i  =>  u_k = (Q_k - sum_{j=1}^k S_j u_{k-j}) / S_0
                u = kernel_->coefficient(n_ + i, k);
                for (std::size_t j = 1; j <= k; ++j) u -= kernel_->coefficient(i, j) * derivative_[i][k - j];
                u /= s0_[i];
                derivative_[i].push_back(u);
            }
            curve_[i].push_back(u / divisor);
        }
    }

    const ODESystem& sys_;
    std::size_t n_;
    std::optional<detail::TaylorKernel> kernel_;
    std::vector<std::vector<Rational>> curve_;
    std::vector<std::vector<Rational>> derivative_;
    std::vector<Rational> s0_;
};

std::size_t effective_limit(const MultiplicityOptions& options, const Integer& bound) {
    if (options.certify) {
        if (!bound.fits_ulong_p() || bound.get_ui() > std::numeric_limits<std::size_t>::max() / 2) {
            throw PreconditionError("certification bound " + to_string(bound) + " is too large to examine");
        }
        return static_cast<std::size_t>(bound.get_ui());
    }
    if (bound.fits_ulong_p() && bound.get_ui() < options.cap) return static_cast<std::size_t>(bound.get_ui());
    return options.cap;
}

MultiplicityResult vanished_through(std::size_t limit, const Integer& bound, MultiplicityMethod method,
                                    std::vector<Rational> prefix) {
    MultiplicityResult r;
    r.method = method;
    r.bound_used = bound;
    r.order = limit;
    r.series_prefix = std::move(prefix);
    r.status = Integer(static_cast<unsigned long>(limit)) >= bound ? MultiplicityStatus::IdenticallyZero
                                                                   : MultiplicityStatus::Inconclusive;
    return r;
}

}  // namespace

ODESystem ODESystem::autonomous(PolyVectorField field, std::vector<Rational> basepoint) {
    require_nonvanishing(field, basepoint);
    ODESystem sys;
    sys.autonomous_ = true;
    sys.field_ = std::move(field);
    sys.basepoint_ = std::move(basepoint);
    return sys;
}

ODESystem ODESystem::rational(std::vector<MultiPoly> s, std::vector<MultiPoly> q, std::vector<Rational> basepoint) {
    const std::size_t n = basepoint.size();
    if (s.size() != n || q.size() != n) {
        throw DimensionError("rational system needs one S and one Q per state variable (" + std::to_string(n) + ")");
    }
    for (const auto* list : {&s, &q}) {
        for (const auto& p : *list) {
            if (p.nvars() != n + 1) {
                throw DimensionError("rational system polynomials must be over the state variables plus t");
            }
        }
    }
    std::vector<Rational> at = basepoint;
    at.emplace_back(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (s[i].evaluate(at) == 0) {
            throw PreconditionError("requires S_i(x0, 0) ≠ 0: S_" + std::to_string(i + 1) + " vanishes at the basepoint");
        }
    }
    ODESystem sys;
    sys.autonomous_ = false;
    sys.s_ = std::move(s);
    sys.q_ = std::move(q);
    sys.basepoint_ = std::move(basepoint);
    return sys;
}

const PolyVectorField& ODESystem::field() const {
    if (!field_) throw PreconditionError("rational system has no polynomial field; use polynomial_field()");
    return *field_;
}

PolyVectorField ODESystem::polynomial_field() const {
    if (autonomous_) return *field_;
    const std::size_t n = dimension();
    std::vector<MultiPoly> components;
    components.reserve(n + 1);
    MultiPoly all = MultiPoly::constant(n + 1, 1);
    for (const auto& s : s_) all *= s;
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly c = q_[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) c *= s_[j];
        }
        components.push_back(std::move(c));
    }
    components.push_back(std::move(all));
    return PolyVectorField(std::move(components));
}

std::vector<Rational> ODESystem::curve_basepoint() const {
    std::vector<Rational> out = basepoint_;
    if (!autonomous_) out.emplace_back(0);
    return out;
}

std::vector<TruncSeries> expand_trajectory(const ODESystem& sys, std::size_t order) {
    TrajectorySolver solver(sys);
    solver.extend_to(order);
    return solver.state(order);
}

std::vector<TruncSeries> curve_series(const ODESystem& sys, std::size_t order) {
    std::vector<TruncSeries> out = expand_trajectory(sys, order);
    if (!sys.is_autonomous()) out.push_back(TruncSeries::time(order));
    return out;
}

std::vector<TruncSeries> ode_residual(const ODESystem& sys, std::span<const TruncSeries> state, std::size_t order) {
    if (order == 0) throw PreconditionError("residual needs order >= 1");
    if (state.size() != sys.dimension()) throw DimensionError("residual: one series per state variable required");
    std::vector<TruncSeries> curve(state.begin(), state.end());
    for (auto& s : curve) s = s.truncated(order);
    if (!sys.is_autonomous()) curve.push_back(TruncSeries::time(order));
    std::vector<TruncSeries> out;
    for (std::size_t i = 0; i < sys.dimension(); ++i) {
        const TruncSeries velocity = curve[i].derivative();
        if (sys.is_autonomous()) {
            out.push_back(velocity - compose_with_series(sys.field()[i], curve, order - 1));
        } else {
            const TruncSeries s = compose_with_series(sys.s()[i], curve, order - 1);
            const TruncSeries q = compose_with_series(sys.q()[i], curve, order - 1);
            out.push_back(s * velocity - q);
        }
    }
    return out;
}

std::size_t MultiplicityResult::mu() const {
    if (status != MultiplicityStatus::Finite) throw PreconditionError("multiplicity is not finite");
    return order;
}

bool same_outcome(const MultiplicityResult& a, const MultiplicityResult& b) {
    // For IdenticallyZero the checked order depends on the route (early exit stops sooner).
    return a.status == b.status && a.bound_used == b.bound_used &&
           (a.status == MultiplicityStatus::IdenticallyZero || a.order == b.order);
}

Integer certification_bound(const MultiPoly& p, const ODESystem& sys) {
    const unsigned dim = static_cast<unsigned>(sys.curve_nvars());
    if (p.nvars() != dim) throw DimensionError("polynomial variable count does not match the system");
    const unsigned deg = std::max(p.total_degree().value_or(0), dim - 1);
    const unsigned q = std::max(sys.polynomial_field().coeff_degree(), 1u);
    return bound_multiplicity(dim, deg, q);
}

MultiplicityResult multiplicity_series(const MultiPoly& p, const ODESystem& sys, const MultiplicityOptions& options) {
    const Integer bound = options.bound_override ? *options.bound_override : certification_bound(p, sys);
    if (p.nvars() != sys.curve_nvars()) throw DimensionError("polynomial variable count does not match the system");
    if (p.is_zero()) {
        MultiplicityResult r;
        r.status = MultiplicityStatus::IdenticallyZero;
        r.method = MultiplicityMethod::SeriesComposition;
        r.bound_used = bound;
        r.early_exit = true;
        return r;
    }
    const std::size_t limit = effective_limit(options, bound);
    TrajectorySolver solver(sys);
    std::size_t order = std::min<std::size_t>(limit, 16);
    while (true) {
        solver.extend_to(order);
        std::vector<TruncSeries> curve = solver.state(order);
        if (!sys.is_autonomous()) curve.push_back(TruncSeries::time(order));
        const TruncSeries composed = compose_with_series(p, curve, order);
        const auto coeffs = composed.coefficients();
        if (const auto mu = composed.order_of_vanishing()) {
            MultiplicityResult r;
            r.status = MultiplicityStatus::Finite;
            r.order = *mu;
            r.method = MultiplicityMethod::SeriesComposition;
            r.bound_used = bound;
            r.series_prefix.assign(coeffs.begin(), coeffs.end());
            return r;
        }
        if (order == limit) {
            return vanished_through(limit, bound, MultiplicityMethod::SeriesComposition,
                                    std::vector<Rational>(coeffs.begin(), coeffs.end()));
        }
        order = std::min(limit, 2 * order);
    }
}

MultiplicityResult multiplicity_lie(const MultiPoly& p, const PolyVectorField& xi, std::span<const Rational> x0,
                                    const MultiplicityOptions& options) {
    require_nonvanishing(xi, x0);
    if (p.nvars() != xi.nvars()) throw DimensionError("polynomial variable count does not match the field");
    const Integer bound = [&] {
        if (options.bound_override) return *options.bound_override;
        const unsigned dim = static_cast<unsigned>(xi.nvars());
        return bound_multiplicity(dim, std::max(p.total_degree().value_or(0), dim - 1),
                                  std::max(xi.coeff_degree(), 1u));
    }();
    const std::size_t limit = effective_limit(options, bound);
    LieChain chain(xi, p);
    std::vector<Rational> prefix;
    Integer kfact = 1;
    for (std::size_t k = 0; k <= limit; ++k) {
        if (k > 0) kfact *= static_cast<unsigned long>(k);
        const MultiPoly& entry = chain.at(k);
        if (entry.is_zero()) {
            // Every later entry is a derivative of this one, so P(x(t)) is a polynomial of degree < k in t
            // whose coefficients were all checked to vanish.
            MultiplicityResult r;
            r.status = MultiplicityStatus::IdenticallyZero;
            r.order = k == 0 ? 0 : k - 1;
            r.method = MultiplicityMethod::LieChain;
            r.bound_used = bound;
            r.early_exit = true;
            r.series_prefix = std::move(prefix);
            return r;
        }
        const Rational value = entry.evaluate(x0);
        prefix.push_back(value / kfact);
        if (value != 0) {
            MultiplicityResult r;
            r.status = MultiplicityStatus::Finite;
            r.order = k;
            r.method = MultiplicityMethod::LieChain;
            r.bound_used = bound;
            r.series_prefix = std::move(prefix);
            return r;
        }
    }
    return vanished_through(limit, bound, MultiplicityMethod::LieChain, std::move(prefix));
}

MultiplicityResult multiplicity_lie(const MultiPoly& p, const ODESystem& sys, const MultiplicityOptions& options) {
    MultiplicityOptions opts = options;
    if (!opts.bound_override) opts.bound_override = certification_bound(p, sys);
    return multiplicity_lie(p, sys.polynomial_field(), sys.curve_basepoint(), opts);
}

MultiplicityResult multiplicity(const MultiPoly& p, const ODESystem& sys, const MultiplicityOptions& options) {
    switch (options.method) {
        case MethodChoice::Series:
            return multiplicity_series(p, sys, options);
        case MethodChoice::Lie:
            return multiplicity_lie(p, sys, options);
        case MethodChoice::Both:
            break;
    }
    const MultiplicityResult series = multiplicity_series(p, sys, options);
    const MultiplicityResult lie = multiplicity_lie(p, sys, options);
    if (series.status == lie.status && series.bound_used == lie.bound_used &&
        (series.status != MultiplicityStatus::Finite || series.order == lie.order)) {
        MultiplicityResult r = series.series_prefix.size() >= lie.series_prefix.size() ? series : lie;
        r.method = MultiplicityMethod::CrossChecked;
        r.early_exit = series.early_exit || lie.early_exit;
        if (r.status == MultiplicityStatus::IdenticallyZero) r.order = std::max(series.order, lie.order);
        return r;
    }
    // An early-exit certificate may beat a capped coefficient search; anything else is a contradiction.
    const auto compatible = [](const MultiplicityResult& inconclusive, const MultiplicityResult& decisive) {
        return inconclusive.status == MultiplicityStatus::Inconclusive &&
               decisive.status == MultiplicityStatus::IdenticallyZero && decisive.early_exit;
    };
    if (compatible(series, lie)) return lie;
    if (compatible(lie, series)) return series;
    throw InconsistencyError("series composition and Lie chain disagree: " + std::string(to_string(series.status)) +
                             "(" + std::to_string(series.order) + ") vs " + std::string(to_string(lie.status)) + "(" +
                             std::to_string(lie.order) + ")");
}

std::string_view to_string(MultiplicityStatus status) {
    switch (status) {
        case MultiplicityStatus::Finite:
            return "finite";
        case MultiplicityStatus::IdenticallyZero:
            return "identically_zero";
        case MultiplicityStatus::Inconclusive:
            return "inconclusive";
    }
    return "unknown";
}

std::string_view to_string(MultiplicityMethod method) {
    switch (method) {
        case MultiplicityMethod::SeriesComposition:
            return "series";
        case MultiplicityMethod::LieChain:
            return "lie";
        case MultiplicityMethod::CrossChecked:
            return "cross_checked";
    }
    return "unknown";
}

std::string_view to_string(MethodChoice method) {
    switch (method) {
        case MethodChoice::Series:
            return "series";
        case MethodChoice::Lie:
            return "lie";
        case MethodChoice::Both:
            return "both";
    }
    return "unknown";
}

MethodChoice parse_method_choice(std::string_view text) {
    if (text == "series") return MethodChoice::Series;
    if (text == "lie") return MethodChoice::Lie;
    if (text == "both") return MethodChoice::Both;
    throw PreconditionError("unknown method '" + std::string(text) + "' (expected series, lie or both)");
}

}  // namespace trajmult
