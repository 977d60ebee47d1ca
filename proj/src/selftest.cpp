#include "trajmult/selftest.hpp"

#include <functional>
#include <string>

#include "trajmult/bounds.hpp"
#include "trajmult/noetherian.hpp"
#include "trajmult/nonholonomy.hpp"
#include "trajmult/parse.hpp"
#include "trajmult/random.hpp"
#include "trajmult/trajectory.hpp"

namespace trajmult {

namespace {

class Runner {
public:
    explicit Runner(std::ostream& log) : log_(log) {}

    void check(const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string detail;
        try {
            ok = body();
        } catch (const std::exception& e) {
            detail = std::string(" (") + e.what() + ")";
        }
        log_ << (ok ? "PASS " : "FAIL ") << name << detail << '\n';
        if (ok) {
            ++report_.passed;
        } else {
            ++report_.failed;
            report_.failures.push_back(name + detail);
        }
    }

    SelftestReport report() const { return report_; }

private:
    std::ostream& log_;
    SelftestReport report_;
};

const std::vector<std::string> kXY{"x", "y"};

MultiPoly xy(const char* text) {
    return parse_polynomial(text, kXY);
}

PolyVectorField field(std::initializer_list<const char*> comps, const std::vector<std::string>& vars) {
    std::vector<MultiPoly> out;
    for (const char* c : comps) out.push_back(parse_polynomial(c, vars));
    return PolyVectorField(std::move(out));
}

void golden(Runner& r) {
    const PolyVectorField xi = field({"1", "x"}, kXY);
    const std::vector<Rational> origin(2);

    r.check("example A: Finite(4) cross-checked", [&] {
        const auto res = multiplicity(xy("2*y - x^2 + x^4"), ODESystem::autonomous(xi, origin));
        return res.status == MultiplicityStatus::Finite && res.order == 4 &&
               res.method == MultiplicityMethod::CrossChecked;
    });
    r.check("example A: chain values (0,0,0,0,24)", [&] {
        const auto chain = iterated_lie_chain(xi, xy("2*y - x^2 + x^4"), 4);
        const std::vector<Rational> expected{0, 0, 0, 0, 24};
        for (std::size_t k = 0; k < 5; ++k) {
            if (chain[k].evaluate(origin) != expected[k]) return false;
        }
        return true;
    });
    r.check("y - x^2/2 is identically zero on the trajectory", [&] {
        const auto res = multiplicity(xy("y - x^2/2"), ODESystem::autonomous(xi, origin));
        return res.status == MultiplicityStatus::IdenticallyZero && res.bound_used == bound_thm3(2, 2, 1);
    });
    r.check("(1+t) dx/dt = 1 with P = x - t + t^2/2: Finite(3)", [&] {
        const std::vector<std::string> vars{"x", "t"};
        const auto sys = ODESystem::rational({parse_polynomial("1 + t", vars)}, {parse_polynomial("1", vars)}, {0});
        const auto res = multiplicity(parse_polynomial("x - t + t^2/2", vars), sys);
        return res.status == MultiplicityStatus::Finite && res.order == 3;
    });
    r.check("exp chain: f - 1 - x has multiplicity 2", [&] {
        const std::vector<std::string> vars{"x", "f"};
        NoetherianChain chain(1, {{parse_polynomial("f", vars)}}, {1});
        const NoetherianField nf{chain, {parse_polynomial("1", vars)}};
        const auto res = noetherian_multiplicity(parse_polynomial("f - 1 - x", vars), nf);
        return res.status == MultiplicityStatus::Finite && res.order == 2;
    });
    r.check("bound values 776, 4096, 9, 136, 12417", [] {
        return bound_thm3(2, 2, 2) == 776 && bound_thm3(2, 4, 1) == 4096 && bound_thm5(1, 1, 2) == 9 &&
               bound_thm6(1, 1, 1, 1, 1) == 136 && bound_thm7(1, 1, 1, 1, 2) == 12417;
    });
    r.check("Heisenberg: d = 3, N = 2, certified", [] {
        const std::vector<std::string> vars{"x", "y", "z"};
        const VectorFieldSystem sys({field({"1", "0", "0"}, vars), field({"0", "1", "x"}, vars)});
        const auto res = degree_of_nonholonomy(sys, std::vector<Rational>(3), 3);
        return res.d == 3 && res.n == 2 && res.certified;
    });
    r.check("Grushin: d = 2, N = 2, certified", [&] {
        const VectorFieldSystem sys({field({"1", "0"}, kXY), field({"0", "x"}, kXY)});
        const auto res = degree_of_nonholonomy(sys, origin, 3);
        return res.d == 2 && res.n == 2 && res.certified;
    });
    r.check("parse/print round trip", [] {
        const MultiPoly p = xy("2*y - x^2 + x^4 - 3/7*x*y + 5");
        return parse_polynomial(format_polynomial(p, kXY), kXY) == p;
    });
}

void invariants(Runner& r, std::uint64_t seed, std::size_t count) {
    RandomInstances gen(seed);
    std::size_t chain_rule = 0, equivalence = 0, bound3 = 0, degree = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = gen.uniform(1, 3);
        const unsigned p = static_cast<unsigned>(gen.uniform(0, 4));
        const unsigned q = static_cast<unsigned>(gen.uniform(1, 2));
        const std::vector<Rational> origin(n);
        const PolyVectorField xi = gen.field_nonvanishing_at(n, q, origin);
        const MultiPoly poly = gen.poly_of_degree(n, p);
        const ODESystem sys = ODESystem::autonomous(xi, origin);

        const auto chain = iterated_lie_chain(xi, poly, 12);
        const auto composed = compose_with_series(poly, expand_trajectory(sys, 12), 12);
        bool ok = true;
        for (std::size_t k = 0; k <= 12; ++k) {
            if (composed[k] * factorial(k) != chain[k].evaluate(origin)) ok = false;
        }
        chain_rule += ok;
        bool deg_ok = true;
        for (std::size_t k = 0; k <= 6; ++k) {
            if (!chain[k].is_zero() && *chain[k].total_degree() > p + k * (q - 1)) deg_ok = false;
        }
        degree += deg_ok;

        MultiplicityOptions opts;
        opts.cap = 64;
        const auto series = multiplicity_series(poly, sys, opts);
        const auto lie = multiplicity_lie(poly, sys, opts);
        equivalence += same_outcome(series, lie);
        const bool bounded = series.status != MultiplicityStatus::Finite || p + 1 < n ||
                             Integer(static_cast<unsigned long>(series.order)) <= bound_thm3(static_cast<unsigned>(n), p, q);
        bound3 += bounded;
    }
    const auto all = [count](std::size_t c) { return [c, count] { return c == count; }; };
    r.check("chain-rule identity k!*coeff_k = (xi^k P)(0), k <= 12 (" + std::to_string(chain_rule) + "/" +
                std::to_string(count) + ")",
            all(chain_rule));
    r.check("series and Lie routes agree (" + std::to_string(equivalence) + "/" + std::to_string(count) + ")",
            all(equivalence));
    r.check("finite multiplicities within the multiplicity bound (" + std::to_string(bound3) + "/" +
                std::to_string(count) + ")",
            all(bound3));
    r.check("deg xi^k P <= p + k(q-1) for k <= 6 (" + std::to_string(degree) + "/" + std::to_string(count) + ")",
            all(degree));

    RandomInstances alg(seed + 1);
    r.check("Jacobi identity and antisymmetry on random fields", [&] {
        for (int i = 0; i < 10; ++i) {
            const std::size_t n = alg.uniform(1, 3);
            const auto a = alg.field(n, 2), b = alg.field(n, 2), c = alg.field(n, 2);
            const auto jacobi = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
                                lie_bracket(c, lie_bracket(a, b));
            if (!jacobi.is_zero() || lie_bracket(a, b) != -lie_bracket(b, a)) return false;
        }
        return true;
    });
    r.check("Leibniz rule for the Lie derivative", [&] {
        for (int i = 0; i < 10; ++i) {
            const std::size_t n = alg.uniform(1, 3);
            const auto xi = alg.field(n, 2);
            const auto p = alg.poly(n, 3), q = alg.poly(n, 3);
            if (lie_derivative(xi, p * q) != p * lie_derivative(xi, q) + q * lie_derivative(xi, p)) return false;
        }
        return true;
    });
}

}  // namespace

SelftestReport run_selftest(std::ostream& log, std::uint64_t seed, std::size_t random_instances) {
    Runner runner(log);
    golden(runner);
    invariants(runner, seed, random_instances);
    return runner.report();
}

}  // namespace trajmult
