#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace trajmult {

/// One element of a Hall basis of the free Lie algebra on r generators.
/// Generators have `left == right == npos` and `generator` set; brackets are [left, right]
/// with indices into the same basis.
struct HallWord {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t order = 1;  // number of generator occurrences
    std::size_t generator = npos;
    std::size_t left = npos;
    std::size_t right = npos;

    bool is_generator() const noexcept { return generator != npos; }
};

/// Hall basis (basic commutators) through `max_order`, sorted by order.
/// [h_i, h_j] is included iff i > j and, when h_i = [h_k, h_l], l <= j.
std::vector<HallWord> hall_basis(std::size_t generators, std::size_t max_order);

/// "X1", "[X2,X1]", ... with 1-based generator numbers.
std::string format_hall_word(const std::vector<HallWord>& basis, std::size_t index);

/// Dimension of the degree-k component of the free Lie algebra on r generators (Witt's formula).
std::size_t witt_dimension(std::size_t generators, std::size_t order);

}  // namespace trajmult
