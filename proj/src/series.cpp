#include "trajmult/series.hpp"

#include <algorithm>
#include <string>

#include "trajmult/error.hpp"

namespace trajmult {

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DimensionError("truncated series needs at least the constant coefficient");
}

TruncSeries TruncSeries::constant(const Rational& value, std::size_t exact_to) {
    std::vector<Rational> c(exact_to + 1);
    c[0] = value;
    return TruncSeries(std::move(c));
}

TruncSeries TruncSeries::time(std::size_t exact_to, const Rational& value) {
    std::vector<Rational> c(exact_to + 1);
    c[0] = value;
    if (exact_to >= 1) c[1] = 1;
    return TruncSeries(std::move(c));
}

TruncSeries TruncSeries::truncated(std::size_t exact_to) const {
    if (exact_to > this->exact_to()) {
        throw PreconditionError("cannot extend a series exact to order " + std::to_string(this->exact_to()) +
                                " to order " + std::to_string(exact_to));
    }
    return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(exact_to) + 1));
}

TruncSeries TruncSeries::derivative() const {
    if (exact_to() == 0) throw PreconditionError("derivative of a series exact only to order 0 is unknown");
    std::vector<Rational> c(exact_to());
    for (std::size_t k = 1; k <= exact_to(); ++k) c[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return TruncSeries(std::move(c));
}

std::optional<std::size_t> TruncSeries::order_of_vanishing() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) return k;
    }
    return std::nullopt;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& factor) {
    for (auto& c : coeffs_) c *= factor;
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    // Leading zeros are common (trajectories through the origin); skip them.
    std::size_t za = 0;
    while (za < n && a.coeffs_[za] == 0) ++za;
    std::size_t zb = 0;
    while (zb < n && b.coeffs_[zb] == 0) ++zb;
    std::vector<Rational> c(n);
    mpq_class prod;
    for (std::size_t i = za; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = zb; i + j < n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            mpq_mul(prod.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            c[i + j] += prod;
        }
    }
    return TruncSeries(std::move(c));
}

namespace {

// Horner in variable `var` over the terms in [first, last), which all agree on exponents of variables
// before `var` and are sorted by descending exponent of `var` within each recursion level.
TruncSeries horner(std::vector<const Term*>& terms, std::size_t var, std::span<const TruncSeries> series,
                   std::size_t order) {
    const std::size_t nvars = series.size();
    if (var == nvars) {
        Rational sum = 0;
        for (const Term* t : terms) sum += t->coefficient;
        return TruncSeries::constant(sum, order);
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [var](const Term* a, const Term* b) { return a->exponents[var] > b->exponents[var]; });
    const TruncSeries s = series[var].truncated(order);
    TruncSeries acc = TruncSeries::constant(0, order);
    unsigned current = terms.front()->exponents[var];
    auto it = terms.begin();
    while (true) {
        auto group_end = std::find_if(it, terms.end(), [&](const Term* t) { return t->exponents[var] != current; });
        std::vector<const Term*> group(it, group_end);
        acc += horner(group, var + 1, series, order);
        const unsigned next = group_end == terms.end() ? 0 : (*group_end)->exponents[var];
        for (unsigned k = next; k < current; ++k) acc = acc * s;
        if (group_end == terms.end()) break;
        current = next;
        it = group_end;
    }
    return acc;
}

}  // namespace

TruncSeries compose_with_series(const MultiPoly& p, std::span<const TruncSeries> series, std::size_t order) {
    if (series.size() != p.nvars()) {
        throw DimensionError("composition needs one series per variable: got " + std::to_string(series.size()) +
                             ", expected " + std::to_string(p.nvars()));
    }
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series[i].exact_to() < order) {
            throw PreconditionError("series for variable " + std::to_string(i) + " is exact only to order " +
                                    std::to_string(series[i].exact_to()) + ", composition requested to order " +
                                    std::to_string(order));
        }
    }
    if (p.is_zero()) return TruncSeries::constant(0, order);
    std::vector<const Term*> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) terms.push_back(&t);
    return horner(terms, 0, series, order);
}

}  // namespace trajmult
