#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "budget.hpp"
#include "kostant_wallach.hpp"
#include "text.hpp"
#include "version.hpp"

namespace gtkit {

using json = nlohmann::ordered_json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

// Rational entries appear as integers or "p/q" strings.
inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline json rational_to_json(const Rational& r) {
    if (r.den() == 1) {
        const mpz_class n = r.num();
        if (n.fits_slong_p()) return json(n.get_si());
    }
    return json(r.str());
}

// ---- system files: {ring, order, generators} --------------------------------

template <CoefficientField F>
json system_to_json(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
    json j;
    j["format"] = "gtkit-system";
    json vars = json::array();
    for (const auto& v : ring->variables()) vars.push_back(json::array({v.row, v.col}));
    j["ring"] = {{"grid_n", ring->grid_n()}, {"variables", std::move(vars)}};
    j["order"] = ring->order().name();
    json gs = json::array();
    for (const auto& g : gens) gs.push_back(to_string(g));
    j["generators"] = std::move(gs);
    return j;
}

template <CoefficientField F>
struct LoadedSystem {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> generators;
};

template <CoefficientField F>
LoadedSystem<F> system_from_json(const json& j, const F& field, MonomialOrder order) {
    if (!j.is_object() || !j.contains("ring") || !j.contains("generators"))
        throw ParseError("system file must be an object with ring and generators");
    const json& jr = j["ring"];
    if (!jr.contains("grid_n") || !jr.contains("variables"))
        throw ParseError("system ring must carry grid_n and variables");
    const int grid_n = jr["grid_n"].get<int>();
    std::vector<Variable> vars;
    for (const auto& jv : jr["variables"]) {
        if (!jv.is_array() || jv.size() != 2)
            throw ParseError("ring variable must be a [row, col] pair");
        vars.push_back(Variable{jv[0].get<int>(), jv[1].get<int>()});
    }
    LoadedSystem<F> out;
    out.ring = make_sub_ring(grid_n, std::move(vars), field, order);
    for (const auto& jg : j["generators"]) {
        if (!jg.is_string()) throw ParseError("generators must be polynomial strings");
        out.generators.push_back(parse_polynomial(out.ring, jg.get<std::string>()));
    }
    return out;
}

// The stored order, unless the caller overrides it.
inline MonomialOrder system_order(const json& j, const std::string& override_name) {
    std::string name = override_name;
    if (name.empty() && j.contains("order")) name = j["order"].get<std::string>();
    if (name.empty() || name == "degrevlex") return MonomialOrder{OrderKind::DegRevLex, 0};
    if (name == "lex") return MonomialOrder{OrderKind::Lex, 0};
    throw ParseError("unknown monomial order " + name);
}

// ---- matrix files: array of rows ---------------------------------------------

inline ConcreteMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix file must be a nonempty array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& jr : j) {
        if (!jr.is_array() || jr.size() != j.size())
            throw ParseError("matrix must be square");
        std::vector<Rational> row;
        for (const auto& je : jr) row.push_back(rational_from_json(je));
        rows.push_back(std::move(row));
    }
    return ConcreteMatrix::from_rows(std::move(rows));
}

inline json matrix_to_json(const ConcreteMatrix& m) {
    json j = json::array();
    for (const auto& row : m.a) {
        json jr = json::array();
        for (const auto& x : row) jr.push_back(rational_to_json(x));
        j.push_back(std::move(jr));
    }
    return j;
}

inline std::vector<Rational> beta_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("beta file must be an array of rationals");
    std::vector<Rational> out;
    for (const auto& je : j) out.push_back(rational_from_json(je));
    return out;
}

// ---- reports ------------------------------------------------------------------

// Report skeleton: everything except "timing" is a pure function of
// (argv, seed, field), so byte-identical runs stay byte-identical.
inline json report_skeleton(const std::string& claim, json config) {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["claim"] = claim;
    j["config"] = std::move(config);
    j["verdict"] = "";
    j["artifacts"] = json::object();
    return j;
}

inline json budget_to_json(const Budget& b) {
    return json{{"max_pairs", b.max_pairs},
                {"max_seconds", b.max_seconds},
                {"max_degree", b.max_degree}};
}

// Minimal structural validation against the shipped schema's requirements.
inline std::vector<std::string> validate_report(const json& j) {
    std::vector<std::string> errors;
    auto need = [&](const char* key, bool ok) {
        if (!ok) errors.push_back(std::string("report.") + key + " missing or mistyped");
    };
    need("schema_version", j.contains("schema_version") && j["schema_version"].is_string());
    need("tool", j.contains("tool") && j["tool"].is_object() &&
                     j["tool"].contains("name") && j["tool"]["name"].is_string() &&
                     j["tool"].contains("version") && j["tool"]["version"].is_string());
    need("claim", j.contains("claim") && j["claim"].is_string());
    need("config", j.contains("config") && j["config"].is_object());
    need("verdict", j.contains("verdict") && j["verdict"].is_string());
    if (j.contains("verdict") && j["verdict"].is_string()) {
        const std::string v = j["verdict"].get<std::string>();
        if (v != "verified_exact" && v != "verified_modular" &&
            v != "inconclusive_budget" && v != "FAILED" && v != "success") {
            errors.push_back("report.verdict has unknown value " + v);
        }
        if (v == "FAILED" && !j.contains("failure"))
            errors.push_back("FAILED report lacks a failure payload");
    }
    need("artifacts", j.contains("artifacts") && j["artifacts"].is_object());
    need("timing", j.contains("timing") && j["timing"].is_object() &&
                       j["timing"].contains("wall_seconds"));
    return errors;
}

}  // namespace gtkit
