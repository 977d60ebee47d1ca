#include "trajmult/rank.hpp"

#include <string>

#include "trajmult/error.hpp"

namespace trajmult {

namespace {

void make_primitive(std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& x : v) {
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g > 1) {
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

}  // namespace

bool ExactRankTracker::insert(std::span<const Rational> v) {
    if (v.size() != dimension_) {
        throw DimensionError("rank tracker: vector of length " + std::to_string(v.size()) + ", expected " +
                             std::to_string(dimension_));
    }
    Integer common = 1;
    for (const auto& x : v) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].get_num() * (common / v[i].get_den());

    for (const auto& row : rows_) {
        const Integer factor = w[row.pivot];
        if (factor == 0) continue;
        const Integer& lead = row.entries[row.pivot];
        // w <- lead * w - factor * row; clears column `pivot`
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = lead * w[i] - factor * row.entries[i];
        make_primitive(w);
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0) {
            make_primitive(w);
            rows_.push_back({i, std::move(w)});
            return true;
        }
    }
    return false;
}

std::size_t exact_rank(const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) return 0;
    ExactRankTracker tracker(vectors.front().size());
    for (const auto& v : vectors) tracker.insert(v);
    return tracker.rank();
}

}  // namespace trajmult
