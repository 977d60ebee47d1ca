#include "trajmult/noetherian.hpp"

#include <algorithm>
#include <string>

#include "trajmult/bounds.hpp"
#include "trajmult/error.hpp"

namespace trajmult {

NoetherianChain::NoetherianChain(std::size_t n, std::vector<std::vector<MultiPoly>> g, std::vector<Rational> f0)
    : n_(n), g_(std::move(g)), f0_(std::move(f0)) {
    if (f0_.size() != g_.size()) {
        throw DimensionError("Noetherian chain: " + std::to_string(g_.size()) + " rows of g but " +
                             std::to_string(f0_.size()) + " initial values");
    }
    for (const auto& row : g_) {
        if (row.size() != n_) throw DimensionError("Noetherian chain: each row of g needs n entries");
        for (const auto& entry : row) {
            if (entry.nvars() != nvars()) throw DimensionError("Noetherian chain: g_ij must be over n + m variables");
        }
    }
}

unsigned NoetherianChain::alpha() const {
    unsigned a = 0;
    for (const auto& row : g_) {
        for (const auto& entry : row) a = std::max(a, entry.total_degree().value_or(0));
    }
    return a;
}

std::vector<Rational> NoetherianChain::basepoint() const {
    std::vector<Rational> out(n_);
    out.insert(out.end(), f0_.begin(), f0_.end());
    return out;
}

unsigned NoetherianField::degree() const {
    unsigned d = 0;
    for (const auto& c : q) d = std::max(d, c.total_degree().value_or(0));
    return d;
}

namespace {

PolyVectorField lift(const NoetherianChain& chain, const std::vector<MultiPoly>& q) {
    if (q.size() != chain.n()) {
        throw DimensionError("Noetherian field needs " + std::to_string(chain.n()) + " coefficients, got " +
                             std::to_string(q.size()));
    }
    std::vector<MultiPoly> components;
    components.reserve(chain.nvars());
    for (const auto& c : q) {
        if (c.nvars() != chain.nvars()) throw DimensionError("Noetherian field coefficients must be over n + m variables");
        components.push_back(c);
    }
    for (std::size_t i = 0; i < chain.m(); ++i) {
        MultiPoly df(chain.nvars());
        for (std::size_t j = 0; j < chain.n(); ++j) df += chain.g(i, j) * q[j];
        components.push_back(std::move(df));
    }
    return PolyVectorField(std::move(components));
}

}  // namespace

PolyVectorField lift_field(const NoetherianField& nf) {
    return lift(nf.chain, nf.q);
}

VectorFieldSystem lift_system(const NoetherianChain& chain, const std::vector<std::vector<MultiPoly>>& qs) {
    std::vector<PolyVectorField> fields;
    fields.reserve(qs.size());
    for (const auto& q : qs) fields.push_back(lift(chain, q));
    return VectorFieldSystem(std::move(fields));
}

Integer noetherian_certification_bound(const MultiPoly& psi, const NoetherianField& nf) {
    const auto& chain = nf.chain;
    const unsigned p = std::max(psi.total_degree().value_or(0), static_cast<unsigned>(chain.nvars()) - 1);
    return bound_noetherian_multiplicity(static_cast<unsigned>(chain.n()), static_cast<unsigned>(chain.m()), p,
                                         std::max(nf.degree(), 1u), std::max(chain.alpha(), 1u));
}

MultiplicityResult noetherian_multiplicity(const MultiPoly& psi, const NoetherianField& nf,
                                           const MultiplicityOptions& options) {
    if (psi.nvars() != nf.chain.nvars()) throw DimensionError("psi must be a polynomial in (x, f)");
    PolyVectorField lifted = lift_field(nf);
    if (lifted.vanishes_at(nf.chain.basepoint())) {
        throw PreconditionError("requires ξ(0) ≠ 0: the lifted field vanishes at (0, f(0))");
    }
    const ODESystem sys = ODESystem::autonomous(std::move(lifted), nf.chain.basepoint());
    MultiplicityOptions opts = options;
    if (!opts.bound_override) opts.bound_override = noetherian_certification_bound(psi, nf);
    return multiplicity(psi, sys, opts);
}

NonholonomyResult noetherian_nonholonomy(const NoetherianChain& chain,
                                         const std::vector<std::vector<MultiPoly>>& qs, std::size_t max_order) {
    const VectorFieldSystem lifted = lift_system(chain, qs);
    unsigned q = 0;
    for (const auto& row : qs) {
        for (const auto& c : row) q = std::max(q, c.total_degree().value_or(0));
    }
    NonholonomyOptions options;
    options.certification_bound = [&](std::size_t d) -> std::optional<Integer> {
        if (d < 2) return std::nullopt;
        return bound_noetherian_nonholonomy(static_cast<unsigned>(chain.n()), static_cast<unsigned>(chain.m()),
                                            std::max(q, 1u), std::max(chain.alpha(), 1u), static_cast<unsigned>(d));
    };
    return degree_of_nonholonomy(lifted, chain.basepoint(), max_order, options);
}

}  // namespace trajmult
