#include "trajmult/lie.hpp"

#include <algorithm>
#include <string>

#include "trajmult/error.hpp"

namespace trajmult {

PolyVectorField::PolyVectorField(std::vector<MultiPoly> components) : components_(std::move(components)) {
    for (const auto& c : components_) {
        if (c.nvars() != components_.size()) {
            throw DimensionError("vector field with " + std::to_string(components_.size()) +
                                 " components has a component over " + std::to_string(c.nvars()) + " variables");
        }
    }
}

PolyVectorField PolyVectorField::zero(std::size_t nvars) {
    return PolyVectorField(std::vector<MultiPoly>(nvars, MultiPoly(nvars)));
}

unsigned PolyVectorField::coeff_degree() const {
    unsigned q = 0;
    for (const auto& c : components_) q = std::max(q, c.total_degree().value_or(0));
    return q;
}

bool PolyVectorField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const MultiPoly& c) { return c.is_zero(); });
}

std::vector<Rational> PolyVectorField::evaluate(std::span<const Rational> point) const {
    std::vector<Rational> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.evaluate(point));
    return out;
}

bool PolyVectorField::vanishes_at(std::span<const Rational> point) const {
    const auto v = evaluate(point);
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

PolyVectorField PolyVectorField::operator-() const {
    std::vector<MultiPoly> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(-c);
    return PolyVectorField(std::move(out));
}

PolyVectorField PolyVectorField::operator+(const PolyVectorField& other) const {
    if (other.nvars() != nvars()) throw DimensionError("vector field sum: dimension mismatch");
    std::vector<MultiPoly> out = components_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.components_[i];
    return PolyVectorField(std::move(out));
}

PolyVectorField PolyVectorField::scaled(const Rational& factor) const {
    std::vector<MultiPoly> out = components_;
    for (auto& c : out) c *= factor;
    return PolyVectorField(std::move(out));
}

MultiPoly lie_derivative(const PolyVectorField& xi, const MultiPoly& p) {
    if (xi.nvars() != p.nvars()) {
        throw DimensionError("lie_derivative: field over " + std::to_string(xi.nvars()) +
                             " variables applied to a polynomial over " + std::to_string(p.nvars()));
    }
    MultiPoly out(p.nvars());
    if (p.is_constant()) return out;
    for (std::size_t i = 0; i < xi.nvars(); ++i) {
        if (xi[i].is_zero()) continue;
        const MultiPoly d = p.partial_derivative(i);
        if (d.is_zero()) continue;
        out += xi[i] * d;
    }
    return out;
}

std::vector<MultiPoly> iterated_lie_chain(const PolyVectorField& xi, const MultiPoly& p, std::size_t kmax) {
    LieChain chain(xi, p);
    std::vector<MultiPoly> out;
    out.reserve(kmax + 1);
    for (std::size_t k = 0; k <= kmax; ++k) out.push_back(chain.at(k));
    return out;
}

LieChain::LieChain(PolyVectorField xi, MultiPoly p) : xi_(std::move(xi)) {
    if (xi_.nvars() != p.nvars()) {
        throw DimensionError("lie chain: field over " + std::to_string(xi_.nvars()) +
                             " variables applied to a polynomial over " + std::to_string(p.nvars()));
    }
    chain_.push_back(std::move(p));
}

const MultiPoly& LieChain::at(std::size_t k) {
    while (chain_.size() <= k) {
        MultiPoly next = lie_derivative(xi_, chain_.back());
        chain_.push_back(std::move(next));
    }
    return chain_[k];
}

PolyVectorField lie_bracket(const PolyVectorField& a, const PolyVectorField& b) {
    if (a.nvars() != b.nvars()) {
        throw DimensionError("lie_bracket: fields over " + std::to_string(a.nvars()) + " and " +
                             std::to_string(b.nvars()) + " variables");
    }
    std::vector<MultiPoly> out;
    out.reserve(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) out.push_back(lie_derivative(a, b[i]) - lie_derivative(b, a[i]));
    return PolyVectorField(std::move(out));
}

}  // namespace trajmult
