#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "trajmult/rational.hpp"

namespace trajmult {

/// Incremental exact rank of a growing set of rational vectors.
///
/// Vectors are scaled to primitive integer vectors and reduced fraction-free against an echelon basis,
/// so no rational arithmetic or rounding is involved.
class ExactRankTracker {
public:
    explicit ExactRankTracker(std::size_t dimension) : dimension_(dimension) {}

    /// Returns true iff `v` is independent of everything inserted so far (the rank grew).
    bool insert(std::span<const Rational> v);

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t dimension() const noexcept { return dimension_; }

private:
    struct Row {
        std::size_t pivot;
        std::vector<Integer> entries;
    };

    std::size_t dimension_;
    std::vector<Row> rows_;
};

/// Rank of a list of vectors of equal length.
std::size_t exact_rank(const std::vector<std::vector<Rational>>& vectors);

}  // namespace trajmult
