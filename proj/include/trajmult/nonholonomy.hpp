#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trajmult/bounds.hpp"
#include "trajmult/hall.hpp"
#include "trajmult/lie.hpp"

namespace trajmult {

/// Nonempty family of polynomial vector fields on the same space.
class VectorFieldSystem {
public:
    explicit VectorFieldSystem(std::vector<PolyVectorField> fields);

    std::size_t nvars() const noexcept { return fields_.front().nvars(); }
    std::size_t size() const noexcept { return fields_.size(); }
    const std::vector<PolyVectorField>& fields() const noexcept { return fields_; }
    const PolyVectorField& operator[](std::size_t i) const { return fields_.at(i); }
    /// Maximal coefficient degree over all fields.
    unsigned q() const;

private:
    std::vector<PolyVectorField> fields_;
};

struct HallBracket {
    std::size_t index;  // position in the Hall basis
    std::size_t order;
    PolyVectorField field;
};

/// Instantiates Hall basis elements of orders 1..max_order as vector fields, in basis order, and hands
/// each to `visit`. Stops early when `visit` returns false.
void for_each_hall_bracket(const VectorFieldSystem& sys, std::size_t max_order,
                           const std::function<bool(const std::vector<HallWord>&, const HallBracket&)>& visit);
std::vector<HallBracket> hall_brackets(const VectorFieldSystem& sys, std::size_t max_order);

enum class NonholonomyCertificate {
    None,
    /// Bracket values reached the full dimension of the space.
    FullRank,
    /// Every Hall bracket of some order is the zero field, so all higher brackets vanish identically.
    Nilpotent,
    /// Exploration reached the degree-of-nonholonomy bound for the observed span dimension.
    BoundReached,
};

struct NonholonomyResult {
    /// Dimension of the span of the explored bracket values.
    std::size_t d = 0;
    /// Certified: the degree of nonholonomy. Otherwise a lower bound (least order reaching rank d).
    std::size_t n = 0;
    bool certified = false;
    NonholonomyCertificate certificate = NonholonomyCertificate::None;
    /// rank_trace[k-1]: rank of the values of all brackets of order <= k.
    std::vector<std::size_t> rank_trace;
    std::size_t max_order_explored = 0;
    std::optional<Integer> bound_used;
    /// Hall words whose values increased the rank, in discovery order.
    std::vector<std::string> spanning_brackets;
};

struct NonholonomyOptions {
    NonholonomyBoundVariant variant = NonholonomyBoundVariant::Grouped;
    /// Bound on N given the span dimension d; defaults to the polynomial-system bound with q' = max(q, 1).
    /// Returning nullopt means no bound is available for that d.
    std::function<std::optional<Integer>(std::size_t d)> certification_bound;
};

/// Span dimension and degree of nonholonomy of `sys` at `x0`, exploring brackets through `max_order`.
NonholonomyResult degree_of_nonholonomy(const VectorFieldSystem& sys, std::span<const Rational> x0,
                                        std::size_t max_order, const NonholonomyOptions& options = {});

std::string_view to_string(NonholonomyCertificate certificate);

}  // namespace trajmult
