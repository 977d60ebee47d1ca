#include <doctest.h>

#include "trajmult/error.hpp"
#include "trajmult/lie.hpp"
#include "trajmult/parse.hpp"
#include "trajmult/random.hpp"

using namespace trajmult;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

MultiPoly P(const char* s, const std::vector<std::string>& vars = kXY) { return parse_polynomial(s, vars); }

PolyVectorField F(std::initializer_list<const char*> comps, const std::vector<std::string>& vars = kXY) {
    std::vector<MultiPoly> out;
    for (const char* c : comps) out.push_back(parse_polynomial(c, vars));
    return PolyVectorField(std::move(out));
}

}  // namespace

TEST_CASE("vector field basics") {
    const PolyVectorField xi = F({"1", "x^2*y"});
    CHECK(xi.coeff_degree() == 3);
    CHECK(PolyVectorField::zero(2).coeff_degree() == 0);
    CHECK(PolyVectorField::zero(2).is_zero());
    CHECK(xi.evaluate(std::vector<Rational>{2, 3}) == std::vector<Rational>{1, 12});
    CHECK_FALSE(xi.vanishes_at(std::vector<Rational>{0, 0}));
    CHECK_THROWS_AS(PolyVectorField({P("x"), P("y"), P("x")}), DimensionError);
}

TEST_CASE("lie_derivative: hand computations") {
    CHECK(lie_derivative(F({"1", "x"}), P("2*y - x^2 + x^4")) == P("4*x^3"));
    CHECK(lie_derivative(F({"1", "x"}), P("y - x^2/2")).is_zero());
    CHECK(lie_derivative(F({"x*y", "3"}), P("17")).is_zero());
    CHECK_THROWS_AS(lie_derivative(F({"1", "x"}), P("x", kXYZ)), DimensionError);
}

TEST_CASE("iterated_lie_chain") {
    const auto chain = iterated_lie_chain(F({"1", "x"}), P("2*y - x^2 + x^4"), 4);
    REQUIRE(chain.size() == 5);
    CHECK(chain[0] == P("2*y - x^2 + x^4"));
    CHECK(chain[1] == P("4*x^3"));
    CHECK(chain[2] == P("12*x^2"));
    CHECK(chain[3] == P("24*x"));
    CHECK(chain[4] == P("24"));

    const std::vector<std::string> x{"x"};
    const auto d = iterated_lie_chain(F({"1"}, x), P("x^5", x), 5);
    const std::vector<MultiPoly> expected{P("x^5", x), P("5*x^4", x), P("20*x^3", x),
                                          P("60*x^2", x), P("120*x", x), P("120", x)};
    CHECK(d == expected);

    const auto zero = iterated_lie_chain(F({"1", "x"}), MultiPoly(2), 3);
    CHECK(zero.size() == 4);
    for (const auto& z : zero) CHECK(z.is_zero());
}

TEST_CASE("LieChain caches and extends lazily") {
    LieChain chain(F({"1", "x"}), P("x^3 + y"));
    CHECK(chain.computed() == 1);
    CHECK(chain.at(2) == P("6*x + 1"));
    CHECK(chain.computed() == 3);
    CHECK(chain.at(1) == P("3*x^2 + x"));
    CHECK(chain.computed() == 3);
}

TEST_CASE("lie_bracket: hand computations") {
    CHECK(lie_bracket(F({"1", "0", "0"}, kXYZ), F({"0", "1", "x"}, kXYZ)) == F({"0", "0", "1"}, kXYZ));
    CHECK(lie_bracket(F({"1", "0"}), F({"0", "x"})) == F({"0", "1"}));
    const PolyVectorField a = F({"x*y", "y^2 + 1"});
    CHECK(lie_bracket(a, a).is_zero());
    CHECK_THROWS_AS(lie_bracket(a, F({"1", "0", "0"}, kXYZ)), DimensionError);
}

TEST_CASE("Lie algebra identities on random fields") {
    RandomInstances gen(5);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = gen.uniform(1, 3);
        const PolyVectorField a = gen.field(n, 2), b = gen.field(n, 2), c = gen.field(n, 2);
        CHECK(lie_bracket(a, b) == -lie_bracket(b, a));
        const PolyVectorField jacobi = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
                                       lie_bracket(c, lie_bracket(a, b));
        CHECK(jacobi.is_zero());
        // bilinearity in the first slot
        const Rational s = gen.coefficient();
        CHECK(lie_bracket(a.scaled(s) + c, b) == lie_bracket(a, b).scaled(s) + lie_bracket(c, b));
        const unsigned qa = a.coeff_degree(), qb = b.coeff_degree();
        if (qa >= 1 && qb >= 1) {
            const PolyVectorField ab = lie_bracket(a, b);
            for (const auto& comp : ab.components()) {
                if (!comp.is_zero()) CHECK(*comp.total_degree() <= qa + qb - 1);
            }
        }
    }
}

TEST_CASE("Leibniz rule and degree growth along chains") {
    RandomInstances gen(6);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = gen.uniform(1, 3);
        const unsigned q = static_cast<unsigned>(gen.uniform(1, 2));
        const PolyVectorField xi = gen.field_nonvanishing_at(n, q, std::vector<Rational>(n));
        const MultiPoly p = gen.poly(n, 3), r = gen.poly(n, 3);
        CHECK(lie_derivative(xi, p * r) == p * lie_derivative(xi, r) + r * lie_derivative(xi, p));

        const unsigned deg = static_cast<unsigned>(gen.uniform(0, 4));
        const MultiPoly base = gen.poly_of_degree(n, deg);
        const auto chain = iterated_lie_chain(xi, base, 6);
        for (std::size_t k = 0; k <= 6; ++k) {
            if (!chain[k].is_zero()) CHECK(*chain[k].total_degree() <= deg + k * (q - 1));
        }
    }
}
