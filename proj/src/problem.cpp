#include "trajmult/problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "trajmult/parse.hpp"

namespace trajmult {

using nlohmann::json;

namespace {

constexpr std::string_view kSchemaName = "trajmult.result";

const json& member(const json& obj, const char* key, const std::string& context) {
    if (!obj.contains(key)) throw ProblemError(context + ": missing member '" + key + "'");
    return obj.at(key);
}

std::string as_string(const json& v, const std::string& context) {
    if (v.is_string()) return v.get<std::string>();
    // Integers are unambiguous; floats are rejected so no value is ever silently rounded.
    if (v.is_number_integer()) return v.dump();
    throw ProblemError(context + ": expected a string (or integer)");
}

std::vector<std::string> as_string_list(const json& v, const std::string& context) {
    if (!v.is_array()) throw ProblemError(context + ": expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_string(v[i], context + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::vector<std::string>> as_matrix(const json& v, const std::string& context) {
    if (!v.is_array()) throw ProblemError(context + ": expected an array of arrays");
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_string_list(v[i], context + "[" + std::to_string(i) + "]"));
    return out;
}

std::size_t as_count(const json& v, const std::string& context) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ProblemError(context + ": expected a nonnegative integer");
    }
    return v.get<std::size_t>();
}

void check_names(const std::vector<std::string>& names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) {
            throw ProblemError("invalid variable name '" + n + "'");
        }
        if (!seen.insert(n).second) throw ProblemError("duplicate variable name '" + n + "'");
    }
}

MultiPoly parse_in(const std::string& text, const std::vector<std::string>& vars, const std::string& context) {
    try {
        return parse_polynomial(text, vars);
    } catch (const ParseError& e) {
        throw ParseError(context + ": " + e.what(), e.position());
    }
}

std::vector<MultiPoly> parse_list(const std::vector<std::string>& texts, const std::vector<std::string>& vars,
                                  const std::string& context) {
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        out.push_back(parse_in(texts[i], vars, context + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<Rational> basepoint_of(const ProblemFile& file, std::size_t dimension) {
    if (!file.basepoint) return std::vector<Rational>(dimension);
    if (file.basepoint->size() != dimension) {
        throw ProblemError("basepoint has " + std::to_string(file.basepoint->size()) + " entries, expected " +
                           std::to_string(dimension));
    }
    std::vector<Rational> out;
    for (const auto& s : *file.basepoint) out.push_back(parse_rational(s));
    return out;
}

MultiplicityOptions mult_options(const ProblemOptions& o) {
    MultiplicityOptions out;
    if (o.cap) out.cap = *o.cap;
    if (o.method) out.method = parse_method_choice(*o.method);
    if (o.certify) out.certify = *o.certify;
    return out;
}

std::vector<std::string> with_fvars(const ProblemFile& file) {
    std::vector<std::string> names = file.vars;
    names.insert(names.end(), file.chain->fvars.begin(), file.chain->fvars.end());
    check_names(names);
    return names;
}

NoetherianChain build_chain(const ProblemFile& file, const std::vector<std::string>& names) {
    const ChainText& c = *file.chain;
    if (c.g.size() != c.fvars.size() || c.f0.size() != c.fvars.size()) {
        throw ProblemError("chain: g and f0 need one entry per name in fvars");
    }
    std::vector<std::vector<MultiPoly>> g;
    for (std::size_t i = 0; i < c.g.size(); ++i) {
        if (c.g[i].size() != file.vars.size()) {
            throw ProblemError("chain.g[" + std::to_string(i) + "] needs one entry per variable in vars");
        }
        g.push_back(parse_list(c.g[i], names, "chain.g[" + std::to_string(i) + "]"));
    }
    std::vector<Rational> f0;
    for (const auto& s : c.f0) f0.push_back(parse_rational(s));
    return NoetherianChain(file.vars.size(), std::move(g), std::move(f0));
}

json rational_list(std::span<const Rational> values, std::size_t limit) {
    json out = json::array();
    for (std::size_t i = 0; i < values.size() && i < limit; ++i) out.push_back(to_string(values[i]));
    return out;
}

json header(std::string_view command, std::string_view status) {
    return json{{"schema", kSchemaName},
                {"schema_version", kResultSchemaVersion},
                {"command", command},
                {"status", status}};
}

}  // namespace

ProblemFile parse_problem(const json& doc) {
    if (!doc.is_object()) throw ProblemError("problem file must be a JSON object");
    static const std::set<std::string> known{"vars", "field", "system", "rational_system", "poly",
                                             "chain", "basepoint", "options", "description"};
    for (const auto& [key, _] : doc.items()) {
        if (!known.contains(key)) throw ProblemError("unknown member '" + key + "'");
    }
    ProblemFile file;
    file.vars = as_string_list(member(doc, "vars", "problem"), "vars");
    check_names(file.vars);
    if (doc.contains("field")) file.field = as_string_list(doc["field"], "field");
    if (doc.contains("system")) file.system = as_matrix(doc["system"], "system");
    if (doc.contains("rational_system")) {
        const json& rs = doc["rational_system"];
        if (!rs.is_object()) throw ProblemError("rational_system: expected an object with S and Q");
        file.rational_system = RationalSystemText{as_string_list(member(rs, "S", "rational_system"), "rational_system.S"),
                                                  as_string_list(member(rs, "Q", "rational_system"), "rational_system.Q")};
    }
    if (doc.contains("poly")) file.poly = as_string(doc["poly"], "poly");
    if (doc.contains("chain")) {
        const json& c = doc["chain"];
        if (!c.is_object()) throw ProblemError("chain: expected an object with fvars, g and f0");
        file.chain = ChainText{as_string_list(member(c, "fvars", "chain"), "chain.fvars"),
                               as_matrix(member(c, "g", "chain"), "chain.g"),
                               as_string_list(member(c, "f0", "chain"), "chain.f0")};
    }
    if (doc.contains("basepoint")) file.basepoint = as_string_list(doc["basepoint"], "basepoint");
    if (doc.contains("options")) {
        const json& o = doc["options"];
        if (!o.is_object()) throw ProblemError("options: expected an object");
        for (const auto& [key, value] : o.items()) {
            if (key == "cap") {
                file.options.cap = as_count(value, "options.cap");
            } else if (key == "method") {
                file.options.method = as_string(value, "options.method");
            } else if (key == "certify") {
                if (!value.is_boolean()) throw ProblemError("options.certify: expected a boolean");
                file.options.certify = value.get<bool>();
            } else if (key == "bound_variant") {
                file.options.bound_variant = as_string(value, "options.bound_variant");
            } else if (key == "max_order") {
                file.options.max_order = as_count(value, "options.max_order");
            } else {
                throw ProblemError("unknown option '" + key + "'");
            }
        }
    }
    return file;
}

ProblemFile load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ProblemError("cannot open problem file '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ProblemError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
    return parse_problem(doc);
}

MultProblem build_mult_problem(const ProblemFile& file) {
    if (!file.poly) throw ProblemError("mult: missing member 'poly'");
    if (file.field.has_value() == file.rational_system.has_value()) {
        throw ProblemError("mult: exactly one of 'field' and 'rational_system' is required");
    }
    const std::size_t n = file.vars.size();
    const std::vector<Rational> x0 = basepoint_of(file, n);
    if (file.field) {
        if (file.field->size() != n) throw ProblemError("field needs one component per variable");
        PolyVectorField xi(parse_list(*file.field, file.vars, "field"));
        return {parse_in(*file.poly, file.vars, "poly"), ODESystem::autonomous(std::move(xi), x0),
                mult_options(file.options)};
    }
    std::vector<std::string> names = file.vars;
    names.emplace_back("t");
    check_names(names);
    const auto& rs = *file.rational_system;
    if (rs.s.size() != n || rs.q.size() != n) throw ProblemError("rational_system: S and Q need one entry per variable");
    ODESystem sys = ODESystem::rational(parse_list(rs.s, names, "rational_system.S"),
                                        parse_list(rs.q, names, "rational_system.Q"), x0);
    return {parse_in(*file.poly, names, "poly"), std::move(sys), mult_options(file.options)};
}

NonholonomyProblem build_nonholonomy_problem(const ProblemFile& file) {
    if (!file.system) throw ProblemError("nonholonomy: missing member 'system'");
    std::vector<PolyVectorField> fields;
    for (std::size_t i = 0; i < file.system->size(); ++i) {
        const auto& row = (*file.system)[i];
        if (row.size() != file.vars.size()) {
            throw ProblemError("system[" + std::to_string(i) + "] needs one component per variable");
        }
        fields.emplace_back(parse_list(row, file.vars, "system[" + std::to_string(i) + "]"));
    }
    NonholonomyOptions options;
    if (file.options.bound_variant) options.variant = parse_bound_variant(*file.options.bound_variant);
    return {VectorFieldSystem(std::move(fields)), basepoint_of(file, file.vars.size()),
            file.options.max_order.value_or(8), options};
}

NoetherianMultProblem build_noetherian_mult_problem(const ProblemFile& file) {
    if (!file.chain) throw ProblemError("noetherian-mult: missing member 'chain'");
    if (!file.field) throw ProblemError("noetherian-mult: missing member 'field'");
    if (!file.poly) throw ProblemError("noetherian-mult: missing member 'poly'");
    const std::vector<std::string> names = with_fvars(file);
    NoetherianChain chain = build_chain(file, names);
    if (file.field->size() != file.vars.size()) throw ProblemError("field needs one coefficient per variable in vars");
    std::vector<MultiPoly> q = parse_list(*file.field, names, "field");
    return {parse_in(*file.poly, names, "poly"), NoetherianField{std::move(chain), std::move(q)},
            mult_options(file.options)};
}

NoetherianNonholonomyProblem build_noetherian_nonholonomy_problem(const ProblemFile& file) {
    if (!file.chain) throw ProblemError("noetherian-nonholonomy: missing member 'chain'");
    if (!file.system) throw ProblemError("noetherian-nonholonomy: missing member 'system'");
    const std::vector<std::string> names = with_fvars(file);
    NoetherianChain chain = build_chain(file, names);
    std::vector<std::vector<MultiPoly>> qs;
    for (std::size_t i = 0; i < file.system->size(); ++i) {
        const auto& row = (*file.system)[i];
        if (row.size() != file.vars.size()) {
            throw ProblemError("system[" + std::to_string(i) + "] needs one coefficient per variable in vars");
        }
        qs.push_back(parse_list(row, names, "system[" + std::to_string(i) + "]"));
    }
    if (qs.empty()) throw PreconditionError("requires a nonempty system of vector fields");
    return {std::move(chain), std::move(qs), file.options.max_order.value_or(8)};
}

NonholonomyBoundVariant parse_bound_variant(std::string_view text) {
    if (text == "grouped") return NonholonomyBoundVariant::Grouped;
    if (text == "literal") return NonholonomyBoundVariant::Literal;
    throw PreconditionError("unknown bound variant '" + std::string(text) + "' (expected grouped or literal)");
}

json multiplicity_document(std::string_view command, const MultiplicityResult& result) {
    json doc = header(command, to_string(result.status));
    if (result.status == MultiplicityStatus::Finite) {
        doc["mu"] = result.order;
    } else {
        doc["checked_to"] = result.order;
    }
    if (result.status == MultiplicityStatus::IdenticallyZero) doc["certified_bound"] = to_string(*result.bound_used);
    doc["method"] = to_string(result.method);
    doc["bound_used"] = result.bound_used ? json(to_string(*result.bound_used)) : json(nullptr);
    doc["early_exit"] = result.early_exit;
    doc["series_prefix"] = rational_list(result.series_prefix, kSeriesPrefixLength);
    return doc;
}

json nonholonomy_document(std::string_view command, const NonholonomyResult& result) {
    json doc = header(command, result.certified ? "certified" : "uncertified");
    doc["d"] = result.d;
    doc["N"] = result.n;
    doc["certified"] = result.certified;
    doc["certificate"] = to_string(result.certificate);
    doc["rank_trace"] = result.rank_trace;
    doc["max_order_explored"] = result.max_order_explored;
    doc["bound_used"] = result.bound_used ? json(to_string(*result.bound_used)) : json(nullptr);
    doc["spanning_brackets"] = result.spanning_brackets;
    return doc;
}

json bound_document(std::string_view theorem, const json& arguments, const Integer& value) {
    json doc = header("bound", "ok");
    doc["theorem"] = theorem;
    doc["arguments"] = arguments;
    doc["value"] = to_string(value);
    return doc;
}

json error_document(std::string_view command, std::string_view message) {
    json doc = header(command, "error");
    doc["message"] = message;
    return doc;
}

std::vector<std::string> validate_result_document(const json& doc) {
    std::vector<std::string> problems;
    const auto need = [&](const char* key, auto&& type_ok, const char* type_name) {
        if (!doc.contains(key)) {
            problems.push_back(std::string("missing '") + key + "'");
        } else if (!type_ok(doc.at(key))) {
            problems.push_back(std::string("'") + key + "' must be " + type_name);
        }
    };
    const auto is_string = [](const json& v) { return v.is_string(); };
    const auto is_count = [](const json& v) { return v.is_number_unsigned(); };
    const auto is_bool = [](const json& v) { return v.is_boolean(); };
    const auto is_integer_string = [](const json& v) {
        if (!v.is_string()) return false;
        const auto s = v.get<std::string>();
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    const auto is_optional_integer_string = [&](const json& v) { return v.is_null() || is_integer_string(v); };
    const auto is_rational_list = [](const json& v) {
        if (!v.is_array()) return false;
        for (const auto& x : v) {
            if (!x.is_string()) return false;
            try {
                (void)parse_rational(x.get<std::string>());
            } catch (const ParseError&) {
                return false;
            }
        }
        return true;
    };
    const auto is_count_list = [](const json& v) {
        return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number_unsigned(); });
    };
    const auto is_string_list = [](const json& v) {
        return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_string(); });
    };

    if (!doc.is_object()) return {"document must be an object"};
    if (doc.value("schema", "") != kSchemaName) problems.emplace_back("'schema' must be \"trajmult.result\"");
    if (!doc.contains("schema_version") || doc["schema_version"] != kResultSchemaVersion) {
        problems.emplace_back("'schema_version' must be " + std::to_string(kResultSchemaVersion));
    }
    need("command", is_string, "a string");
    need("status", is_string, "a string");
    if (!problems.empty()) return problems;

    const std::string command = doc["command"];
    const std::string status = doc["status"];
    if (doc.contains("timings") && !doc["timings"].is_object()) problems.emplace_back("'timings' must be an object");
    if (status == "error") {
        need("message", is_string, "a string");
        return problems;
    }
    if (command == "mult" || command == "noetherian-mult") {
        if (status == "finite") {
            need("mu", is_count, "a nonnegative integer");
        } else if (status == "identically_zero" || status == "inconclusive") {
            need("checked_to", is_count, "a nonnegative integer");
            if (status == "identically_zero") need("certified_bound", is_integer_string, "an integer string");
        } else {
            problems.push_back("unknown status '" + status + "'");
        }
        need("method", is_string, "a string");
        need("bound_used", is_optional_integer_string, "an integer string or null");
        need("early_exit", is_bool, "a boolean");
        need("series_prefix", is_rational_list, "a list of rational strings");
        if (doc.contains("series_prefix") && doc["series_prefix"].size() > kSeriesPrefixLength) {
            problems.emplace_back("'series_prefix' has more than 16 entries");
        }
    } else if (command == "nonholonomy" || command == "noetherian-nonholonomy") {
        if (status != "certified" && status != "uncertified") problems.push_back("unknown status '" + status + "'");
        need("d", is_count, "a nonnegative integer");
        need("N", is_count, "a nonnegative integer");
        need("certified", is_bool, "a boolean");
        need("certificate", is_string, "a string");
        need("rank_trace", is_count_list, "a list of nonnegative integers");
        need("max_order_explored", is_count, "a nonnegative integer");
        need("bound_used", is_optional_integer_string, "an integer string or null");
        need("spanning_brackets", is_string_list, "a list of strings");
    } else if (command == "bound") {
        if (status != "ok") problems.push_back("unknown status '" + status + "'");
        need("theorem", is_string, "a string");
        need("arguments", [](const json& v) { return v.is_object(); }, "an object");
        need("value", is_integer_string, "an integer string");
    } else if (command == "selftest") {
        need("passed", is_count, "a nonnegative integer");
        need("failed", is_count, "a nonnegative integer");
    } else {
        problems.push_back("unknown command '" + command + "'");
    }
    return problems;
}

int exit_code_for(const json& doc) {
    const std::string status = doc.value("status", "error");
    if (status == "error" || status == "failed") return 1;
    if (status == "inconclusive" || status == "uncertified") return 2;
    return 0;
}

}  // namespace trajmult
