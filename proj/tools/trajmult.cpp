// trajmult: multiplicities of zeros along trajectories, explicit bounds, degrees of nonholonomy.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trajmult/bounds.hpp"
#include "trajmult/noetherian.hpp"
#include "trajmult/nonholonomy.hpp"
#include "trajmult/problem.hpp"
#include "trajmult/selftest.hpp"
#include "trajmult/trajectory.hpp"

namespace {

using nlohmann::json;
using namespace trajmult;

struct MultFlags {
    std::string input;
    std::string method;
    std::size_t cap = 0;
    bool certify = false;
};

struct NonholonomyFlags {
    std::string input;
    std::size_t max_order = 0;
    std::string variant;
};

struct BoundFlags {
    unsigned n = 1, p = 0, q = 1, d = 2, m = 0, alpha = 1;
    std::string variant = "grouped";
};

void apply(const MultFlags& flags, const CLI::App& app, MultiplicityOptions& options) {
    if (!flags.method.empty()) options.method = parse_method_choice(flags.method);
    if (app.count("--cap") > 0) options.cap = flags.cap;
    if (flags.certify) options.certify = true;
}

void add_mult_flags(CLI::App* cmd, MultFlags& flags) {
    cmd->add_option("-i,--input", flags.input, "Problem file (JSON)")->required();
    cmd->add_option("--method", flags.method, "series, lie or both (overrides the file)")
        ->check(CLI::IsMember({"series", "lie", "both"}));
    cmd->add_option("--cap", flags.cap, "Highest Taylor order examined (default 512)");
    cmd->add_flag("--certify", flags.certify, "Examine through the certification bound, ignoring the cap");
}

json run_bound(const std::string& theorem, const BoundFlags& f) {
    if (theorem == "thm3") {
        return bound_document(theorem, {{"n", f.n}, {"p", f.p}, {"q", f.q}}, bound_thm3(f.n, f.p, f.q));
    }
    if (theorem == "thm5") {
        return bound_document(theorem, {{"n", f.n}, {"q", f.q}, {"d", f.d}, {"variant", f.variant}},
                              bound_thm5(f.n, f.q, f.d, parse_bound_variant(f.variant)));
    }
    if (theorem == "thm6") {
        return bound_document(theorem, {{"n", f.n}, {"m", f.m}, {"p", f.p}, {"q", f.q}, {"alpha", f.alpha}},
                              bound_thm6(f.n, f.m, f.p, f.q, f.alpha));
    }
    return bound_document(theorem, {{"n", f.n}, {"m", f.m}, {"q", f.q}, {"alpha", f.alpha}, {"d", f.d}},
                          bound_thm7(f.n, f.m, f.q, f.alpha, f.d));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multiplicities of zeros on trajectories of polynomial vector fields"};
    app.require_subcommand(1);
    app.fallthrough();
    bool no_timings = false;
    app.add_flag("--no-timings", no_timings, "Omit the timings member (byte-identical output for identical input)");

    MultFlags mult_flags;
    auto* mult = app.add_subcommand("mult", "Multiplicity of a zero of a polynomial on a trajectory");
    add_mult_flags(mult, mult_flags);

    MultFlags nmult_flags;
    auto* nmult = app.add_subcommand("noetherian-mult", "Multiplicity for a Noetherian function and field");
    add_mult_flags(nmult, nmult_flags);

    NonholonomyFlags nh_flags;
    auto* nh = app.add_subcommand("nonholonomy", "Span dimension and degree of nonholonomy of a system");
    nh->add_option("-i,--input", nh_flags.input, "Problem file (JSON)")->required();
    nh->add_option("--max-order", nh_flags.max_order, "Highest bracket order explored (default 8)");
    nh->add_option("--variant", nh_flags.variant, "Grouping of the d > 2 bound: grouped or literal")
        ->check(CLI::IsMember({"grouped", "literal"}));

    NonholonomyFlags nnh_flags;
    auto* nnh = app.add_subcommand("noetherian-nonholonomy", "Degree of nonholonomy with Noetherian coefficients");
    nnh->add_option("-i,--input", nnh_flags.input, "Problem file (JSON)")->required();
    nnh->add_option("--max-order", nnh_flags.max_order, "Highest bracket order explored (default 8)");

    BoundFlags bound_flags;
    std::string theorem;
    auto* bound = app.add_subcommand("bound", "Evaluate an explicit bound exactly");
    bound->add_option("theorem", theorem, "thm3, thm5, thm6 or thm7")
        ->required()
        ->check(CLI::IsMember({"thm3", "thm5", "thm6", "thm7"}));
    bound->add_option("-n", bound_flags.n, "Ambient dimension");
    bound->add_option("-p", bound_flags.p, "Polynomial degree");
    bound->add_option("-q", bound_flags.q, "Field coefficient degree");
    bound->add_option("-d", bound_flags.d, "Span dimension");
    bound->add_option("-m", bound_flags.m, "Noetherian chain order");
    bound->add_option("-a,--alpha", bound_flags.alpha, "Noetherian chain degree");
    bound->add_option("--variant", bound_flags.variant, "thm5 grouping for d > 2: grouped or literal")
        ->check(CLI::IsMember({"grouped", "literal"}));

    std::uint64_t seed = 20240601;
    std::size_t instances = 60;
    auto* selftest = app.add_subcommand("selftest", "Run golden examples and the randomized invariant suite");
    selftest->add_option("--seed", seed, "Seed for the randomized instances");
    selftest->add_option("--instances", instances, "Number of randomized instances");

    std::string command = "trajmult";
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "trajmult: " << e.what() << '\n';
        std::cout << error_document(command, e.what()).dump(2) << '\n';
        return 1;
    }

    const auto start = std::chrono::steady_clock::now();
    json doc;
    try {
        if (mult->parsed()) {
            command = "mult";
            MultProblem problem = build_mult_problem(load_problem(mult_flags.input));
            apply(mult_flags, *mult, problem.options);
            doc = multiplicity_document(command, multiplicity(problem.poly, problem.system, problem.options));
        } else if (nmult->parsed()) {
            command = "noetherian-mult";
            NoetherianMultProblem problem = build_noetherian_mult_problem(load_problem(nmult_flags.input));
            apply(nmult_flags, *nmult, problem.options);
            doc = multiplicity_document(command, noetherian_multiplicity(problem.psi, problem.field, problem.options));
        } else if (nh->parsed()) {
            command = "nonholonomy";
            NonholonomyProblem problem = build_nonholonomy_problem(load_problem(nh_flags.input));
            if (nh->count("--max-order") > 0) problem.max_order = nh_flags.max_order;
            if (!nh_flags.variant.empty()) problem.options.variant = parse_bound_variant(nh_flags.variant);
            doc = nonholonomy_document(
                command, degree_of_nonholonomy(problem.system, problem.basepoint, problem.max_order, problem.options));
        } else if (nnh->parsed()) {
            command = "noetherian-nonholonomy";
            NoetherianNonholonomyProblem problem =
                build_noetherian_nonholonomy_problem(load_problem(nnh_flags.input));
            if (nnh->count("--max-order") > 0) problem.max_order = nnh_flags.max_order;
            doc = nonholonomy_document(command,
                                       noetherian_nonholonomy(problem.chain, problem.coefficients, problem.max_order));
        } else if (bound->parsed()) {
            command = "bound";
            doc = run_bound(theorem, bound_flags);
        } else if (selftest->parsed()) {
            command = "selftest";
            std::ostringstream log;
            const SelftestReport report = run_selftest(log, seed, instances);
            std::cerr << log.str();
            doc = {{"schema", "trajmult.result"},
                   {"schema_version", kResultSchemaVersion},
                   {"command", command},
                   {"status", report.failed == 0 ? "ok" : "failed"},
                   {"passed", report.passed},
                   {"failed", report.failed},
                   {"failures", report.failures}};
        }
    } catch (const InconsistencyError& e) {
        std::cerr << "trajmult: internal inconsistency: " << e.what() << '\n';
        doc = error_document(command, std::string("internal inconsistency: ") + e.what());
    } catch (const std::exception& e) {
        std::cerr << "trajmult: " << e.what() << '\n';
        doc = error_document(command, e.what());
    }
    if (!no_timings) {
        const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
        doc["timings"] = {{"total_ms", elapsed.count()}};
    }
    std::cout << doc.dump(2) << '\n';
    return exit_code_for(doc);
}
