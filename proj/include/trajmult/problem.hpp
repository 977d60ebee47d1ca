#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "trajmult/error.hpp"
#include "trajmult/noetherian.hpp"
#include "trajmult/nonholonomy.hpp"
#include "trajmult/trajectory.hpp"

namespace trajmult {

inline constexpr int kResultSchemaVersion = 1;
inline constexpr std::size_t kSeriesPrefixLength = 16;

/// Structurally invalid problem file (missing or mistyped members, conflicting members).
class ProblemError : public Error {
public:
    using Error::Error;
};

struct ProblemOptions {
    std::optional<std::size_t> cap;
    std::optional<std::string> method;
    std::optional<bool> certify;
    std::optional<std::string> bound_variant;
    std::optional<std::size_t> max_order;
};

struct ChainText {
    std::vector<std::string> fvars;
    std::vector<std::vector<std::string>> g;
    std::vector<std::string> f0;
};

struct RationalSystemText {
    std::vector<std::string> s;
    std::vector<std::string> q;
};

/// Raw problem file: expressions are kept as text until a command decides how to read them.
struct ProblemFile {
    std::vector<std::string> vars;
    std::optional<std::vector<std::string>> field;
    std::optional<std::vector<std::vector<std::string>>> system;
    std::optional<RationalSystemText> rational_system;
    std::optional<std::string> poly;
    std::optional<ChainText> chain;
    std::optional<std::vector<std::string>> basepoint;
    ProblemOptions options;
};

ProblemFile parse_problem(const nlohmann::json& doc);
ProblemFile load_problem(const std::filesystem::path& path);

struct MultProblem {
    MultiPoly poly;
    ODESystem system;
    MultiplicityOptions options;
};

struct NonholonomyProblem {
    VectorFieldSystem system;
    std::vector<Rational> basepoint;
    std::size_t max_order;
    NonholonomyOptions options;
};

struct NoetherianMultProblem {
    MultiPoly psi;
    NoetherianField field;
    MultiplicityOptions options;
};

struct NoetherianNonholonomyProblem {
    NoetherianChain chain;
    std::vector<std::vector<MultiPoly>> coefficients;
    std::size_t max_order;
};

/// `field` (autonomous) or `rational_system` (polynomials over vars plus `t`), and `poly`.
MultProblem build_mult_problem(const ProblemFile& file);
/// `system`; basepoint defaults to the origin; max_order defaults to 8.
NonholonomyProblem build_nonholonomy_problem(const ProblemFile& file);
/// `chain`, `field` and `poly`, all over vars plus fvars.
NoetherianMultProblem build_noetherian_mult_problem(const ProblemFile& file);
/// `chain` and `system`, over vars plus fvars.
NoetherianNonholonomyProblem build_noetherian_nonholonomy_problem(const ProblemFile& file);

NonholonomyBoundVariant parse_bound_variant(std::string_view text);

// Result documents. Every document carries "schema", "schema_version", "command" and "status".

nlohmann::json multiplicity_document(std::string_view command, const MultiplicityResult& result);
nlohmann::json nonholonomy_document(std::string_view command, const NonholonomyResult& result);
nlohmann::json bound_document(std::string_view theorem, const nlohmann::json& arguments, const Integer& value);
nlohmann::json error_document(std::string_view command, std::string_view message);

/// Checks a result document against the published schema; returns the violations (empty if valid).
std::vector<std::string> validate_result_document(const nlohmann::json& doc);

/// Exit code for a document: 0 decisive, 2 inconclusive/uncertified, 1 error or failed selftest.
int exit_code_for(const nlohmann::json& doc);

}  // namespace trajmult
