#include "trajmult/nonholonomy.hpp"

#include <algorithm>
#include <string>

#include "trajmult/error.hpp"
#include "trajmult/rank.hpp"

namespace trajmult {

VectorFieldSystem::VectorFieldSystem(std::vector<PolyVectorField> fields) : fields_(std::move(fields)) {
    if (fields_.empty()) throw PreconditionError("requires a nonempty system of vector fields");
    for (const auto& f : fields_) {
        if (f.nvars() != fields_.front().nvars()) throw DimensionError("vector fields in a system must share nvars");
    }
}

unsigned VectorFieldSystem::q() const {
    unsigned q = 0;
    for (const auto& f : fields_) q = std::max(q, f.coeff_degree());
    return q;
}

void for_each_hall_bracket(const VectorFieldSystem& sys, std::size_t max_order,
                           const std::function<bool(const std::vector<HallWord>&, const HallBracket&)>& visit) {
    const std::vector<HallWord> basis = hall_basis(sys.size(), max_order);
    std::vector<PolyVectorField> values;
    values.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const HallWord& w = basis[i];
        if (w.is_generator()) {
            values.push_back(sys[w.generator]);
        } else if (values[w.left].is_zero() || values[w.right].is_zero()) {
            values.push_back(PolyVectorField::zero(sys.nvars()));
        } else {
            values.push_back(lie_bracket(values[w.left], values[w.right]));
        }
        if (!visit(basis, HallBracket{i, w.order, values.back()})) return;
    }
}

std::vector<HallBracket> hall_brackets(const VectorFieldSystem& sys, std::size_t max_order) {
    std::vector<HallBracket> out;
    for_each_hall_bracket(sys, max_order, [&](const std::vector<HallWord>&, const HallBracket& b) {
        out.push_back(b);
        return true;
    });
    return out;
}

NonholonomyResult degree_of_nonholonomy(const VectorFieldSystem& sys, std::span<const Rational> x0,
                                        std::size_t max_order, const NonholonomyOptions& options) {
    if (max_order < 1) throw PreconditionError("requires max_order >= 1");
    if (x0.size() != sys.nvars()) {
        throw DimensionError("basepoint has length " + std::to_string(x0.size()) + ", system has " +
                             std::to_string(sys.nvars()) + " variables");
    }
    const std::size_t n = sys.nvars();
    NonholonomyResult result;
    ExactRankTracker tracker(n);
    std::size_t current_order = 1;
    bool all_zero_at_order = true;
    std::optional<std::size_t> nilpotent_at;

    // Closes the bookkeeping for `current_order` once every bracket of that order has been seen.
    const auto finish_order = [&] {
        result.rank_trace.push_back(tracker.rank());
        result.max_order_explored = current_order;
        if (all_zero_at_order && !nilpotent_at) nilpotent_at = current_order;
    };

    for_each_hall_bracket(sys, max_order, [&](const std::vector<HallWord>& basis, const HallBracket& b) {
        if (b.order != current_order) {
            finish_order();
            if (nilpotent_at) return false;
            current_order = b.order;
            all_zero_at_order = true;
        }
        if (!b.field.is_zero()) all_zero_at_order = false;
        if (tracker.insert(b.field.evaluate(x0))) {
            result.spanning_brackets.push_back(format_hall_word(basis, b.index));
            if (tracker.rank() == n) return false;
        }
        return true;
    });
    if (result.rank_trace.size() < current_order) finish_order();
    // The free Lie algebra on one generator has no brackets at all.
    if (sys.size() == 1 && !nilpotent_at) nilpotent_at = 2;

    result.d = tracker.rank();
    const auto first = std::find(result.rank_trace.begin(), result.rank_trace.end(), result.d);
    result.n = static_cast<std::size_t>(first - result.rank_trace.begin()) + 1;

    if (result.d == n) {
        result.certified = true;
        result.certificate = NonholonomyCertificate::FullRank;
    } else if (nilpotent_at) {
        // Brackets of order >= nilpotent_at all vanish, and the lower ones were all explored.
        result.certified = true;
        result.certificate = NonholonomyCertificate::Nilpotent;
    }

    std::optional<Integer> bound;
    if (options.certification_bound) {
        bound = options.certification_bound(result.d);
    } else if (result.d >= 2) {
        bound = bound_nonholonomy(static_cast<unsigned>(n), std::max(sys.q(), 1u), static_cast<unsigned>(result.d),
                                  options.variant);
    }
    result.bound_used = bound;
    if (!result.certified && bound && Integer(static_cast<unsigned long>(result.max_order_explored)) >= *bound) {
        result.certified = true;
        result.certificate = NonholonomyCertificate::BoundReached;
    }
    return result;
}

std::string_view to_string(NonholonomyCertificate certificate) {
    switch (certificate) {
        case NonholonomyCertificate::None:
            return "none";
        case NonholonomyCertificate::FullRank:
            return "full_rank";
        case NonholonomyCertificate::Nilpotent:
            return "nilpotent";
        case NonholonomyCertificate::BoundReached:
            return "bound_reached";
    }
    return "unknown";
}

}  // namespace trajmult
