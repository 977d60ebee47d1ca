#include "trajmult/hall.hpp"

namespace trajmult {

std::vector<HallWord> hall_basis(std::size_t generators, std::size_t max_order) {
    std::vector<HallWord> basis;
    if (max_order == 0) return basis;
    for (std::size_t g = 0; g < generators; ++g) basis.push_back({1, g, HallWord::npos, HallWord::npos});
    for (std::size_t order = 2; order <= max_order; ++order) {
        const std::size_t existing = basis.size();
        for (std::size_t i = 0; i < existing; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (basis[i].order + basis[j].order != order) continue;
                if (!basis[i].is_generator() && basis[i].right > j) continue;
                basis.push_back({order, HallWord::npos, i, j});
            }
        }
    }
    return basis;
}

std::string format_hall_word(const std::vector<HallWord>& basis, std::size_t index) {
    const HallWord& w = basis.at(index);
    if (w.is_generator()) return "X" + std::to_string(w.generator + 1);
    return "[" + format_hall_word(basis, w.left) + "," + format_hall_word(basis, w.right) + "]";
}

std::size_t witt_dimension(std::size_t generators, std::size_t order) {
    // (1/k) sum_{d | k} mobius(d) r^{k/d}
    auto mobius = [](std::size_t d) {
        int sign = 1;
        for (std::size_t p = 2; p * p <= d; ++p) {
            if (d % p != 0) continue;
            d /= p;
            if (d % p == 0) return 0;
            sign = -sign;
        }
        return d > 1 ? -sign : sign;
    };
    long long sum = 0;
    for (std::size_t d = 1; d <= order; ++d) {
        if (order % d != 0) continue;
        long long power = 1;
        for (std::size_t e = 0; e < order / d; ++e) power *= static_cast<long long>(generators);
        sum += mobius(d) * power;
    }
    return static_cast<std::size_t>(sum / static_cast<long long>(order));
}

}  // namespace trajmult
