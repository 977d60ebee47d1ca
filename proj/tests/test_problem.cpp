#include <doctest.h>

#include <filesystem>

#include "trajmult/problem.hpp"

using namespace trajmult;
using nlohmann::json;

namespace {

const std::filesystem::path kFixtures{TRAJMULT_FIXTURES};

json strip_timings(json doc) {
    doc.erase("timings");
    return doc;
}

}  // namespace

TEST_CASE("problem files parse and build") {
    const ProblemFile a = load_problem(kFixtures / "exA.json");
    CHECK(a.vars == std::vector<std::string>{"x", "y"});
    CHECK(a.options.method == "both");
    const MultProblem pa = build_mult_problem(a);
    CHECK(pa.system.is_autonomous());
    CHECK(pa.options.method == MethodChoice::Both);
    CHECK(multiplicity(pa.poly, pa.system, pa.options).mu() == 4);

    const MultProblem pc = build_mult_problem(load_problem(kFixtures / "exC_rational.json"));
    CHECK_FALSE(pc.system.is_autonomous());
    CHECK(pc.poly.nvars() == 2);
    CHECK(multiplicity(pc.poly, pc.system).mu() == 3);

    const NoetherianMultProblem pd = build_noetherian_mult_problem(load_problem(kFixtures / "exD_noetherian_exp.json"));
    CHECK(pd.field.chain.m() == 1);
    CHECK(noetherian_multiplicity(pd.psi, pd.field).mu() == 2);

    const NonholonomyProblem pe = build_nonholonomy_problem(load_problem(kFixtures / "exE_heisenberg.json"));
    CHECK(pe.max_order == 4);
    CHECK(pe.basepoint == std::vector<Rational>{0, 0, 0});
    CHECK(degree_of_nonholonomy(pe.system, pe.basepoint, pe.max_order).d == 3);

    const NonholonomyProblem pg = build_nonholonomy_problem(load_problem(kFixtures / "grushin.json"));
    CHECK(pg.max_order == 8);

    const NoetherianNonholonomyProblem pn =
        build_noetherian_nonholonomy_problem(load_problem(kFixtures / "noetherian_heisenberg.json"));
    CHECK(pn.max_order == 3);
    CHECK(noetherian_nonholonomy(pn.chain, pn.coefficients, pn.max_order).n == 2);

    CHECK(load_problem(kFixtures / "inconclusive.json").options.cap == 2u);
}

TEST_CASE("every fixture builds for its command") {
    std::size_t count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
        if (entry.path().extension() != ".json") continue;
        ++count;
        const ProblemFile file = load_problem(entry.path());
        if (file.chain && file.system) {
            CHECK_NOTHROW(build_noetherian_nonholonomy_problem(file));
        } else if (file.chain) {
            CHECK_NOTHROW(build_noetherian_mult_problem(file));
        } else if (file.system) {
            CHECK_NOTHROW(build_nonholonomy_problem(file));
        } else {
            CHECK_NOTHROW(build_mult_problem(file));
        }
    }
    CHECK(count >= 6);
}

TEST_CASE("malformed problem files are rejected") {
    CHECK_THROWS_AS(parse_problem(json::array()), ProblemError);
    CHECK_THROWS_AS(parse_problem(json{{"field", {"1"}}}), ProblemError);
    CHECK_THROWS_AS(parse_problem(json{{"vars", {"x"}}, {"bogus", 1}}), ProblemError);
    CHECK_THROWS_AS(parse_problem(json{{"vars", {"x"}}, {"poly", 1.5}}), ProblemError);
    CHECK_THROWS_AS(parse_problem(json{{"vars", {"x"}}, {"options", {{"colour", "red"}}}}), ProblemError);
    CHECK_THROWS_AS(parse_problem(json{{"vars", {"x"}}, {"options", {{"certify", "yes"}}}}), ProblemError);
    CHECK_NOTHROW(parse_problem(json{{"vars", {"x"}}, {"poly", 3}}));

    // both or neither of field / rational_system
    CHECK_THROWS_AS(build_mult_problem(parse_problem(json{{"vars", {"x"}}, {"poly", "x"}})), ProblemError);
    CHECK_THROWS_AS(build_mult_problem(parse_problem(
                        json{{"vars", {"x"}}, {"poly", "x"}, {"field", {"1"}},
                             {"rational_system", {{"S", {"1"}}, {"Q", {"1"}}}}})),
                    ProblemError);
    CHECK_THROWS_AS(build_mult_problem(parse_problem(json{{"vars", {"x", "y"}}, {"poly", "x"}, {"field", {"1"}}})),
                    ProblemError);
    CHECK_THROWS_AS(build_mult_problem(parse_problem(json{{"vars", {"x"}}, {"poly", "x + z"}, {"field", {"1"}}})),
                    ParseError);
    // the basepoint must be regular
    CHECK_THROWS_AS(build_mult_problem(parse_problem(json{{"vars", {"x"}}, {"poly", "x"}, {"field", {"x"}}})),
                    PreconditionError);
    CHECK_THROWS_AS(build_nonholonomy_problem(parse_problem(json{{"vars", {"x"}}, {"system", json::array()}})),
                    PreconditionError);
    CHECK_THROWS(load_problem(kFixtures / "missing.json"));
    CHECK_THROWS_AS(parse_bound_variant("sideways"), Error);
}

TEST_CASE("result documents validate and carry exact values") {
    const MultProblem pa = build_mult_problem(load_problem(kFixtures / "exA.json"));
    const json doc = multiplicity_document("mult", multiplicity(pa.poly, pa.system, pa.options));
    CHECK(validate_result_document(doc).empty());
    CHECK(doc["mu"] == 4);
    CHECK(doc["series_prefix"].size() == kSeriesPrefixLength);
    CHECK(doc["series_prefix"][4] == "1");
    CHECK(exit_code_for(doc) == 0);

    const MultProblem pc = build_mult_problem(load_problem(kFixtures / "exC_rational.json"));
    const json rational = multiplicity_document("mult", multiplicity(pc.poly, pc.system));
    CHECK(rational["series_prefix"][3] == "1/3");
    CHECK(rational["series_prefix"][4] == "-1/4");

    MultiplicityOptions capped;
    capped.cap = 2;
    const json inc = multiplicity_document("mult", multiplicity(pa.poly, pa.system, capped));
    CHECK(inc["status"] == "inconclusive");
    CHECK(validate_result_document(inc).empty());
    CHECK(exit_code_for(inc) == 2);

    const MultProblem pb = build_mult_problem(load_problem(kFixtures / "exB_identically_zero.json"));
    const json zero = multiplicity_document("mult", multiplicity(pb.poly, pb.system));
    CHECK(zero["status"] == "identically_zero");
    CHECK(zero["certified_bound"] == "256");
    CHECK(validate_result_document(zero).empty());

    const NonholonomyProblem pe = build_nonholonomy_problem(load_problem(kFixtures / "exE_heisenberg.json"));
    const json nh = nonholonomy_document("nonholonomy", degree_of_nonholonomy(pe.system, pe.basepoint, 3));
    CHECK(validate_result_document(nh).empty());
    CHECK(nh["N"] == 2);
    const json unc = nonholonomy_document("nonholonomy", degree_of_nonholonomy(pe.system, pe.basepoint, 1));
    CHECK(exit_code_for(unc) == 2);

    const json b = bound_document("thm3", json{{"n", 2}, {"p", 2}, {"q", 2}}, bound_thm3(2, 2, 2));
    CHECK(validate_result_document(b).empty());
    CHECK(b["value"] == "776");

    const json err = error_document("mult", "requires xi(x0) != 0");
    CHECK(validate_result_document(err).empty());
    CHECK(exit_code_for(err) == 1);
}

TEST_CASE("result documents survive a text round trip and are deterministic") {
    const MultProblem pa = build_mult_problem(load_problem(kFixtures / "exA.json"));
    const json first = multiplicity_document("mult", multiplicity(pa.poly, pa.system, pa.options));
    const json second = multiplicity_document("mult", multiplicity(pa.poly, pa.system, pa.options));
    CHECK(first.dump(2) == second.dump(2));
    const json reparsed = json::parse(first.dump(2));
    CHECK(reparsed == first);
    CHECK(validate_result_document(reparsed).empty());

    json timed = first;
    timed["timings"] = {{"total_ms", 1.5}};
    CHECK(validate_result_document(timed).empty());
    CHECK(strip_timings(timed) == first);
}

TEST_CASE("validator reports violations") {
    json doc = bound_document("thm3", json::object(), Integer(776));
    doc["value"] = 776;
    CHECK_FALSE(validate_result_document(doc).empty());

    json mult = error_document("mult", "x");
    mult.erase("message");
    CHECK_FALSE(validate_result_document(mult).empty());

    json wrong = bound_document("thm3", json::object(), Integer(1));
    wrong["schema_version"] = 99;
    CHECK_FALSE(validate_result_document(wrong).empty());

    json prefix = error_document("mult", "x");
    prefix["status"] = "finite";
    CHECK_FALSE(validate_result_document(prefix).empty());
}
