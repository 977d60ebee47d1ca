#include "trajmult/random.hpp"

namespace trajmult {

Rational RandomInstances::coefficient(bool nonzero) {
    std::uniform_int_distribution<int> num(-max_num_, max_num_);
    std::uniform_int_distribution<int> den(1, max_den_);
    int a = num(rng_);
    while (nonzero && a == 0) a = num(rng_);
    Rational r(a, den(rng_));
    r.canonicalize();
    return r;
}

std::size_t RandomInstances::uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Exponents RandomInstances::monomial(std::size_t nvars, unsigned degree) {
    // Distribute `degree` units among the variables.
    Exponents e(nvars, 0);
    if (nvars == 0) return e;
    std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
    for (unsigned k = 0; k < degree; ++k) ++e[pick(rng_)];
    return e;
}

MultiPoly RandomInstances::poly(std::size_t nvars, unsigned degree, std::size_t max_terms) {
    std::vector<Term> terms;
    const std::size_t count = uniform(1, max_terms);
    for (std::size_t i = 0; i < count; ++i) {
        terms.push_back({monomial(nvars, static_cast<unsigned>(uniform(0, degree))), coefficient(true)});
    }
    return MultiPoly::from_terms(nvars, std::move(terms));
}

MultiPoly RandomInstances::poly_of_degree(std::size_t nvars, unsigned degree, std::size_t max_terms) {
    while (true) {
        MultiPoly p = poly(nvars, degree, max_terms);
        p += MultiPoly::from_terms(nvars, {{monomial(nvars, degree), coefficient(true)}});
        if (p.total_degree() == degree) return p;
    }
}

PolyVectorField RandomInstances::field(std::size_t nvars, unsigned degree, std::size_t max_terms) {
    std::vector<MultiPoly> components;
    for (std::size_t i = 0; i < nvars; ++i) {
        components.push_back(uniform(0, 4) == 0 ? MultiPoly(nvars) : poly(nvars, degree, max_terms));
    }
    return PolyVectorField(std::move(components));
}

PolyVectorField RandomInstances::field_nonvanishing_at(std::size_t nvars, unsigned degree,
                                                       const std::vector<Rational>& point) {
    while (true) {
        std::vector<MultiPoly> components;
        for (std::size_t i = 0; i < nvars; ++i) components.push_back(poly(nvars, degree, 4));
        components[uniform(0, nvars - 1)] += MultiPoly::from_terms(nvars, {{monomial(nvars, degree), coefficient(true)}});
        PolyVectorField xi(std::move(components));
        if (xi.coeff_degree() == degree && !xi.vanishes_at(point)) return xi;
    }
}

}  // namespace trajmult
