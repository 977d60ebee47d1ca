#include <doctest.h>

#include "trajmult/error.hpp"
#include "trajmult/parse.hpp"
#include "trajmult/poly.hpp"
#include "trajmult/random.hpp"

using namespace trajmult;

namespace {

const std::vector<std::string> kXY{"x", "y"};
MultiPoly P(const char* s) { return parse_polynomial(s, kXY); }

}  // namespace

TEST_CASE("rational literals") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("canonical form and degree") {
    const MultiPoly p = MultiPoly::from_terms(2, {{{0, 1}, 2}, {{2, 0}, -1}, {{4, 0}, 1}, {{0, 1}, 0}});
    REQUIRE(p.terms().size() == 3);
    CHECK(p.terms()[0].exponents == Exponents{4, 0});
    CHECK(p.terms()[1].exponents == Exponents{2, 0});
    CHECK(p.terms()[2].exponents == Exponents{0, 1});
    CHECK(p.total_degree() == 4u);

    const MultiPoly zero(2);
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.total_degree().has_value());
    CHECK(MultiPoly::constant(2, 5).total_degree() == 0u);

    // duplicates merge, cancellations vanish
    CHECK(MultiPoly::from_terms(1, {{{1}, 1}, {{1}, -1}}).is_zero());
    CHECK(grlex_greater({1, 1}, {2, 0}) == false);
    CHECK(grlex_greater({2, 0}, {1, 1}));
    CHECK(grlex_greater({0, 3}, {2, 0}));
}

TEST_CASE("multiply") {
    CHECK(P("x") * P("x") == P("x^2"));
    CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
    CHECK((P("2*y - x^2 + x^4") * MultiPoly(2)).is_zero());
    CHECK((P("x^3*y + 1") * P("y^2 - 2")).total_degree() == 6u);
    CHECK_THROWS_AS(P("x") * MultiPoly::variable(3, 0), DimensionError);
}

TEST_CASE("partial derivative") {
    CHECK(P("x^4").partial_derivative(0) == P("4*x^3"));
    CHECK(P("2*y - x^2 + x^4").partial_derivative(1) == P("2"));
    CHECK(P("7").partial_derivative(0).is_zero());
    CHECK(P("x^2*y^3").partial_derivative(1) == P("3*x^2*y^2"));
    CHECK_THROWS_AS(P("x").partial_derivative(2), DimensionError);
}

TEST_CASE("evaluate") {
    const std::vector<Rational> origin{0, 0};
    const std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
    CHECK(P("2*y - x^2 + x^4").evaluate(origin) == 0);
    CHECK(P("x^2 + y^2").evaluate(half) == Rational(1, 2));
    CHECK(P("24").evaluate(origin) == 24);
    CHECK_THROWS_AS(P("x").evaluate(std::vector<Rational>{1}), DimensionError);
}

TEST_CASE("variable remapping") {
    const MultiPoly p = P("x^2*y + 3");
    const MultiPoly wider = p.with_extra_variables(1);
    CHECK(wider.nvars() == 3);
    CHECK(wider.evaluate(std::vector<Rational>{2, 5, 9}) == p.evaluate(std::vector<Rational>{2, 5}));
    const std::vector<std::size_t> swap{1, 0};
    CHECK(p.remap_variables(swap, 2) == P("y^2*x + 3"));
}

TEST_CASE("ring axioms on random polynomials") {
    RandomInstances gen(7);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = gen.uniform(1, 3);
        const MultiPoly a = gen.poly(n, 3), b = gen.poly(n, 3), c = gen.poly(n, 3);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).total_degree() == *a.total_degree() + *b.total_degree());
    }
}

TEST_CASE("mixed partials commute and evaluation is multiplicative") {
    RandomInstances gen(8);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = gen.uniform(2, 3);
        const MultiPoly a = gen.poly(n, 4), b = gen.poly(n, 3);
        const std::size_t u = gen.uniform(0, n - 1), v = gen.uniform(0, n - 1);
        CHECK(a.partial_derivative(u).partial_derivative(v) == a.partial_derivative(v).partial_derivative(u));
        std::vector<Rational> point;
        for (std::size_t k = 0; k < n; ++k) point.push_back(gen.coefficient());
        CHECK((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
    }
}
