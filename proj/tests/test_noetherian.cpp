#include <doctest.h>

#include "trajmult/error.hpp"
#include "trajmult/noetherian.hpp"
#include "trajmult/parse.hpp"
#include "trajmult/random.hpp"

using namespace trajmult;

namespace {

const std::vector<std::string> kXF{"x", "f"};
const std::vector<std::string> kXYF{"x", "y", "f"};

MultiPoly P(const char* s, const std::vector<std::string>& vars = kXF) { return parse_polynomial(s, vars); }

PolyVectorField F(std::initializer_list<const char*> comps, const std::vector<std::string>& vars = kXF) {
    std::vector<MultiPoly> out;
    for (const char* c : comps) out.push_back(parse_polynomial(c, vars));
    return PolyVectorField(std::move(out));
}

// f = exp(x): df/dx = f, f(0) = 1.
NoetherianChain exp_chain() { return NoetherianChain(1, {{P("f")}}, {Rational(1)}); }

}  // namespace

TEST_CASE("chain bookkeeping") {
    const NoetherianChain c = exp_chain();
    CHECK(c.n() == 1);
    CHECK(c.m() == 1);
    CHECK(c.nvars() == 2);
    CHECK(c.alpha() == 1);
    CHECK(c.basepoint() == std::vector<Rational>{0, 1});
    CHECK_THROWS(NoetherianChain(1, {{P("f")}}, {}));
    CHECK_THROWS(NoetherianChain(1, {{P("f"), P("x")}}, {Rational(1)}));
}

TEST_CASE("lift_field examples") {
    CHECK(lift_field(NoetherianField{exp_chain(), {P("1")}}) == F({"1", "f"}));
    CHECK(lift_field(NoetherianField{exp_chain(), {P("f")}}) == F({"f", "f^2"}));
    CHECK(lift_field(NoetherianField{exp_chain(), {P("0")}}).is_zero());
    CHECK_THROWS(lift_field(NoetherianField{exp_chain(), {P("1"), P("1")}}));
}

TEST_CASE("lifted degree is at most q + alpha") {
    RandomInstances gen(41);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = gen.uniform(1, 2), m = gen.uniform(1, 2);
        std::vector<std::vector<MultiPoly>> g(m);
        for (auto& row : g) {
            for (std::size_t j = 0; j < n; ++j) row.push_back(gen.poly(n + m, 2, 3));
        }
        NoetherianChain chain(n, g, std::vector<Rational>(m));
        std::vector<MultiPoly> q;
        for (std::size_t j = 0; j < n; ++j) q.push_back(gen.poly(n + m, 2, 3));
        const NoetherianField nf{chain, q};
        CHECK(lift_field(nf).coeff_degree() <= nf.degree() + chain.alpha());
    }
}

TEST_CASE("exp chain multiplicities") {
    const NoetherianField nf{exp_chain(), {P("1")}};
    const MultiplicityResult a = noetherian_multiplicity(P("f - 1 - x"), nf);
    CHECK(a.status == MultiplicityStatus::Finite);
    CHECK(a.mu() == 2);
    REQUIRE(a.bound_used);
    CHECK(*a.bound_used == 136);
    CHECK(*a.bound_used == bound_thm6(1, 1, 1, 1, 1));

    const MultiplicityResult b = noetherian_multiplicity(P("f - 1 - x - 1/2*x^2 - 1/6*x^3"), nf);
    CHECK(b.mu() == 4);
    CHECK(*b.bound_used == bound_thm6(1, 1, 3, 1, 1));
    CHECK(Integer(4) <= *b.bound_used);

    CHECK(noetherian_multiplicity(P("f"), nf).mu() == 0);
    CHECK(noetherian_certification_bound(P("f - 1 - x"), nf) == 136);
}

TEST_CASE("vanishing lifted field is rejected") {
    const NoetherianField nf{exp_chain(), {P("x")}};
    CHECK_THROWS_AS(noetherian_multiplicity(P("f - 1"), nf), PreconditionError);
}

TEST_CASE("chain rule holds along the lifted trajectory") {
    const std::size_t T = 12;
    // exp chain, and a two-variable chain f = 1/(1 - x - y): df/dx = df/dy = f^2
    const NoetherianChain two(2, {{P("f^2", kXYF), P("f^2", kXYF)}}, {Rational(1)});
    const std::vector<NoetherianField> fields{
        {exp_chain(), {P("1 + f")}},
        {two, {P("1 + x*f", kXYF), P("y - 2", kXYF)}},
    };
    for (const auto& nf : fields) {
        const ODESystem sys = ODESystem::autonomous(lift_field(nf), nf.chain.basepoint());
        const auto state = expand_trajectory(sys, T);
        const std::size_t n = nf.chain.n();
        for (std::size_t i = 0; i < nf.chain.m(); ++i) {
            const TruncSeries lhs = state[n + i].derivative();
            TruncSeries rhs = TruncSeries::constant(0, T - 1);
            for (std::size_t j = 0; j < n; ++j) {
                rhs += compose_with_series(nf.chain.g(i, j), state, T - 1) * state[j].derivative();
            }
            CHECK(lhs.truncated(T - 1) == rhs.truncated(T - 1));
        }
    }
    // exp chain explicitly: f(t) = e^t when Q = 1
    const auto state = expand_trajectory(ODESystem::autonomous(F({"1", "f"}), {0, 1}), T);
    for (std::size_t k = 0; k <= T; ++k) CHECK(state[1][k] == Rational(1) / Rational(factorial(k)));
}

TEST_CASE("empty chain degenerates to the polynomial problem") {
    const std::vector<std::string> xy{"x", "y"};
    const NoetherianChain empty(2, {}, {});
    CHECK(empty.m() == 0);
    CHECK(empty.basepoint() == std::vector<Rational>{0, 0});
    const NoetherianField nf{empty, {parse_polynomial("1", xy), parse_polynomial("x", xy)}};
    const MultiPoly psi = parse_polynomial("2*y - x^2 + x^4", xy);
    const MultiplicityResult a = noetherian_multiplicity(psi, nf);
    const MultiplicityResult b = multiplicity(psi, ODESystem::autonomous(lift_field(nf), {0, 0}));
    CHECK(a.status == b.status);
    CHECK(a.mu() == 4);
    CHECK(b.mu() == 4);
    // the Noetherian threshold steps by q + alpha - 1 with alpha' = 1; the polynomial one by q - 1
    CHECK(*a.bound_used == bound_thm6(2, 0, 4, 1, 1));
    CHECK(*a.bound_used == bound_thm3(2, 4, 2));
    CHECK(*b.bound_used == bound_thm3(2, 4, 1));
}

TEST_CASE("lift_system examples") {
    const VectorFieldSystem s1 = lift_system(exp_chain(), {{P("1")}});
    CHECK(s1.size() == 1);
    CHECK(s1[0] == F({"1", "f"}));
    const VectorFieldSystem s2 = lift_system(exp_chain(), {{P("1")}, {P("0")}});
    CHECK(s2[1].is_zero());

    const NoetherianChain toy(2, {{P("0", kXYF), P("x", kXYF)}}, {Rational(0)});
    const std::vector<std::vector<MultiPoly>> qs{{P("1", kXYF), P("0", kXYF)}, {P("0", kXYF), P("1", kXYF)}};
    const VectorFieldSystem lifted = lift_system(toy, qs);
    CHECK(lifted[0] == F({"1", "0", "0"}, kXYF));
    CHECK(lifted[1] == F({"0", "1", "x"}, kXYF));
    const NonholonomyResult r = noetherian_nonholonomy(toy, qs, 4);
    CHECK(r.d == 3);
    CHECK(r.n == 2);
    CHECK(r.certified);
    REQUIRE(r.bound_used);
    CHECK(*r.bound_used == bound_thm7(2, 1, 1, 1, 3));
    CHECK_THROWS(lift_system(toy, {{P("1", kXYF)}}));
}

TEST_CASE("Noetherian multiplicities stay below the bound") {
    RandomInstances gen(42);
    int finite = 0;
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = gen.uniform(1, 2), m = 1;
        std::vector<std::vector<MultiPoly>> g(m);
        for (auto& row : g) {
            for (std::size_t j = 0; j < n; ++j) row.push_back(gen.poly(n + m, 2, 3));
        }
        const NoetherianChain chain(n, g, {gen.coefficient()});
        const auto base = chain.basepoint();
        std::vector<MultiPoly> q;
        for (std::size_t j = 0; j < n; ++j) q.push_back(gen.poly(n + m, 2, 3));
        if (q[0].evaluate(base) == 0) q[0] = q[0] + MultiPoly::constant(n + m, 1);
        const NoetherianField nf{chain, q};

        // psi vanishes at the basepoint so mu >= 1
        MultiPoly psi = gen.poly(n + m, static_cast<unsigned>(gen.uniform(1, 3)), 4);
        psi = psi - MultiPoly::constant(n + m, psi.evaluate(base));
        MultiplicityOptions options;
        options.cap = 64;
        const MultiplicityResult r = noetherian_multiplicity(psi, nf, options);
        if (r.status != MultiplicityStatus::Finite) continue;
        ++finite;
        CHECK(r.mu() >= 1);
        const unsigned p = std::max(psi.total_degree().value_or(0), static_cast<unsigned>(n + m - 1));
        CHECK(Integer(static_cast<unsigned long>(r.mu())) <=
              bound_thm6(static_cast<unsigned>(n), 1, p, std::max(nf.degree(), 1u), std::max(chain.alpha(), 1u)));
    }
    CHECK(finite > 20);
}
