#include <doctest.h>

#include "trajmult/error.hpp"
#include "trajmult/parse.hpp"
#include "trajmult/random.hpp"

using namespace trajmult;

namespace {
const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kX{"x"};
}  // namespace

TEST_CASE("parse: direct grammar reading") {
    const MultiPoly p = parse_polynomial("2*y - x^2 + x^4", kXY);
    const MultiPoly expected = MultiPoly::from_terms(2, {{{0, 1}, 2}, {{2, 0}, -1}, {{4, 0}, 1}});
    CHECK(p == expected);
}

TEST_CASE("parse: zero and cancellation") {
    CHECK(parse_polynomial("0", kX).is_zero());
    CHECK(parse_polynomial("(x+1)^2 - x^2 - 2*x - 1", kX).is_zero());
}

TEST_CASE("parse: rationals, unary minus, division by constants") {
    CHECK(parse_polynomial("1/2*x^2", kX) == parse_polynomial("x^2/2", kX));
    CHECK(parse_polynomial("-x^2", kX) == -parse_polynomial("x^2", kX));
    CHECK(parse_polynomial("--x", kX) == parse_polynomial("x", kX));
    CHECK(parse_polynomial("x/(2/3)", kX) == parse_polynomial("3/2*x", kX));
    CHECK(parse_polynomial("(x + y)^0", kXY) == MultiPoly::constant(2, 1));
    CHECK(parse_polynomial("  3 * ( x - y ) ", kXY) == parse_polynomial("3*x - 3*y", kXY));
}

TEST_CASE("parse: errors carry positions") {
    try {
        (void)parse_polynomial("x + z", kXY);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_polynomial("x^-1", kX), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x +", kX), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x", kX), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x / x", kX), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x / 0", kX), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^2^3", kX), ParseError);
    CHECK_THROWS_AS(parse_polynomial("", kX), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2x", kX), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^y", kXY), ParseError);
}

TEST_CASE("format: canonical graded-lex output") {
    CHECK(format_polynomial(parse_polynomial("2*y - x^2 + x^4", kXY), kXY) == "x^4 - x^2 + 2*y");
    CHECK(format_polynomial(parse_polynomial("y - x^2/2", kXY), kXY) == "-1/2*x^2 + y");
    CHECK(format_polynomial(parse_polynomial("x*y*x - 24", kXY), kXY) == "x^2*y - 24");
    CHECK(format_polynomial(MultiPoly(2), kXY) == "0");
}

TEST_CASE("parse after format is the identity on canonical forms") {
    const std::vector<std::string> xyz{"x", "y", "z"};
    RandomInstances gen(11);
    for (int i = 0; i < 100; ++i) {
        const MultiPoly p = gen.poly(3, 5, 8);
        CHECK(parse_polynomial(format_polynomial(p, xyz), xyz) == p);
    }
}
