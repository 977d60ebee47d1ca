#include "trajmult/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "trajmult/error.hpp"

namespace trajmult {

namespace {

unsigned exponent_sum(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

void require_same_nvars(std::size_t a, std::size_t b, const char* op) {
    if (a != b) {
        throw DimensionError(std::string(op) + ": variable count mismatch (" + std::to_string(a) + " vs " +
                             std::to_string(b) + ")");
    }
}

}  // namespace

bool grlex_greater(const Exponents& a, const Exponents& b) {
    const unsigned da = exponent_sum(a);
    const unsigned db = exponent_sum(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& value) {
    MultiPoly p(nvars);
    if (value != 0) p.terms_.push_back({Exponents(nvars, 0), value});
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) {
        throw DimensionError("variable index " + std::to_string(index) + " out of range for " +
                             std::to_string(nvars) + " variables");
    }
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.terms_.push_back({std::move(e), Rational(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
    std::map<Exponents, Rational, GrlexGreater> acc;
    for (auto& t : terms) {
        if (t.exponents.size() != nvars) {
            throw DimensionError("term exponent vector has length " + std::to_string(t.exponents.size()) +
                                 ", expected " + std::to_string(nvars));
        }
        acc[std::move(t.exponents)] += t.coefficient;
    }
    MultiPoly p(nvars);
    p.terms_.reserve(acc.size());
    for (auto& [e, c] : acc) {
        if (c != 0) p.terms_.push_back({e, std::move(c)});
    }
    return p;
}

bool MultiPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && exponent_sum(terms_.front().exponents) == 0);
}

std::optional<unsigned> MultiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // Leading term in grlex order has maximal total degree.
    return exponent_sum(terms_.front().exponents);
}

Rational MultiPoly::constant_term() const {
    if (!terms_.empty() && exponent_sum(terms_.back().exponents) == 0) return terms_.back().coefficient;
    return Rational(0);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
}

void MultiPoly::merge(const MultiPoly& other, bool subtract) {
    require_same_nvars(nvars_, other.nvars_, subtract ? "subtract" : "add");
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && grlex_greater(a->exponents, b->exponents))) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || grlex_greater(b->exponents, a->exponents)) {
            out.push_back({b->exponents, subtract ? Rational(-b->coefficient) : b->coefficient});
            ++b;
        } else {
            Rational c = subtract ? Rational(a->coefficient - b->coefficient) : Rational(a->coefficient + b->coefficient);
            if (c != 0) out.push_back({std::move(a->exponents), std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    merge(other, false);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    merge(other, true);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
    *this = *this * other;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& factor) {
    if (factor == 0) {
        terms_.clear();
    } else {
        for (auto& t : terms_) t.coefficient *= factor;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_nvars(a.nvars_, b.nvars_, "multiply");
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars_);
    std::map<Exponents, Rational, GrlexGreater> acc;
    Exponents e(a.nvars_);
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ta.exponents[i] + tb.exponents[i];
            acc[e] += ta.coefficient * tb.coefficient;
        }
    }
    MultiPoly out(a.nvars_);
    out.terms_.reserve(acc.size());
    for (auto& [exps, c] : acc) {
        if (c != 0) out.terms_.push_back({exps, std::move(c)});
    }
    return out;
}

MultiPoly MultiPoly::partial_derivative(std::size_t j) const {
    if (j >= nvars_) {
        throw DimensionError("derivative index " + std::to_string(j) + " out of range for " +
                             std::to_string(nvars_) + " variables");
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.exponents[j] == 0) continue;
        Term d{t.exponents, t.coefficient * t.exponents[j]};
        --d.exponents[j];
        out.push_back(std::move(d));
    }
    // Differentiation in one variable can reorder terms of equal degree, so re-canonicalize.
    return from_terms(nvars_, std::move(out));
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) {
        throw DimensionError("evaluation point has length " + std::to_string(point.size()) + ", expected " +
                             std::to_string(nvars_));
    }
    // powers[i][k] = point[i]^k, grown on demand
    std::vector<std::vector<Rational>> powers(nvars_, std::vector<Rational>{Rational(1)});
    Rational sum = 0;
    Rational monomial;
    for (const auto& t : terms_) {
        monomial = t.coefficient;
        for (std::size_t i = 0; i < nvars_; ++i) {
            const unsigned e = t.exponents[i];
            if (e == 0) continue;
            auto& pw = powers[i];
            while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
            monomial *= pw[e];
        }
        sum += monomial;
    }
    return sum;
}

MultiPoly MultiPoly::with_extra_variables(std::size_t count) const {
    std::vector<std::size_t> mapping(nvars_);
    std::iota(mapping.begin(), mapping.end(), std::size_t{0});
    return remap_variables(mapping, nvars_ + count);
}

MultiPoly MultiPoly::remap_variables(std::span<const std::size_t> mapping, std::size_t target_nvars) const {
    if (mapping.size() != nvars_) {
        throw DimensionError("variable mapping has length " + std::to_string(mapping.size()) + ", expected " +
                             std::to_string(nvars_));
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponents e(target_nvars, 0);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (t.exponents[i] == 0) continue;
            if (mapping[i] >= target_nvars) throw DimensionError("variable mapping target out of range");
            e[mapping[i]] += t.exponents[i];
        }
        out.push_back({std::move(e), t.coefficient});
    }
    return from_terms(target_nvars, std::move(out));
}

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b) {
    return a * b;
}

MultiPoly partial_derivative(const MultiPoly& p, std::size_t j) {
    return p.partial_derivative(j);
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> point) {
    return p.evaluate(point);
}

}  // namespace trajmult
