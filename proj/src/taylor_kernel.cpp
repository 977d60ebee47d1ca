#include "taylor_kernel.hpp"

#include <algorithm>

#include "trajmult/error.hpp"

namespace trajmult::detail {

TaylorKernel::TaylorKernel(std::span<const MultiPoly> polys, std::size_t nvars) : nvars_(nvars) {
    for (const auto& p : polys) {
        if (p.nvars() != nvars) throw DimensionError("taylor kernel: polynomial variable count mismatch");
        std::vector<PolyTerm> terms;
        for (const auto& t : p.terms()) terms.push_back({node_for(t.exponents), t.coefficient});
        polys_.push_back(std::move(terms));
    }
    values_.resize(polys_.size());
}

std::ptrdiff_t TaylorKernel::node_for(const Exponents& e) {
    const auto last = std::find_if(e.rbegin(), e.rend(), [](unsigned x) { return x != 0; });
    if (last == e.rend()) return -1;
    const auto known = std::find(node_keys_.begin(), node_keys_.end(), e);
    if (known != node_keys_.end()) return known - node_keys_.begin();
    const std::size_t var = static_cast<std::size_t>(e.rend() - last) - 1;
    Exponents parent = e;
    --parent[var];
    // Parents are created before children, so node order is a valid evaluation order.
    const std::ptrdiff_t parent_index = node_for(parent);
    nodes_.push_back({parent_index, var, {}});
    node_keys_.push_back(e);
    return static_cast<std::ptrdiff_t>(nodes_.size()) - 1;
}

void TaylorKernel::advance(std::span<const std::vector<Rational>> curve) {
    if (curve.size() != nvars_) throw DimensionError("taylor kernel: curve dimension mismatch");
    const std::size_t k = order_;
    for (const auto& c : curve) {
        if (c.size() <= k) throw PreconditionError("taylor kernel: curve coefficient not yet known");
    }
    Rational prod;
    for (auto& node : nodes_) {
        const auto& x = curve[node.var];
        Rational acc = 0;
        if (node.parent < 0) {
            acc = x[k];
        } else {
            const auto& parent = nodes_[static_cast<std::size_t>(node.parent)].coeffs;
            for (std::size_t i = 0; i <= k; ++i) {
                if (parent[i] == 0 || x[k - i] == 0) continue;
                mpq_mul(prod.get_mpq_t(), parent[i].get_mpq_t(), x[k - i].get_mpq_t());
                acc += prod;
            }
        }
        node.coeffs.push_back(std::move(acc));
    }
    for (std::size_t p = 0; p < polys_.size(); ++p) {
        Rational acc = 0;
        for (const auto& term : polys_[p]) {
            if (term.node < 0) {
                if (k == 0) acc += term.coefficient;
            } else {
                const auto& v = nodes_[static_cast<std::size_t>(term.node)].coeffs[k];
                if (v != 0) acc += term.coefficient * v;
            }
        }
        values_[p].push_back(std::move(acc));
    }
    ++order_;
}

}  // namespace trajmult::detail
