#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "visipoly/errors.hpp"
#include "visipoly/graph.hpp"
#include "visipoly/polynomial.hpp"

namespace visipoly {

using ordered_json = nlohmann::ordered_json;

// Canonical graph JSON: fixed key order, edges sorted lexicographically with
// u < v, roles keyed by decimal vertex index in ascending order. Identical
// graphs serialize to identical bytes.
inline ordered_json graph_to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.sorted_edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.family()) {
        ordered_json fam;
        fam["name"] = family_name(g.family()->name);
        fam["params"] = g.family()->params;
        j["family"] = std::move(fam);
    } else {
        j["family"] = nullptr;
    }
    if (!g.roles().empty()) {
        ordered_json roles;
        for (const auto& [v, r] : g.roles()) roles[std::to_string(v)] = role_name(r);
        j["roles"] = std::move(roles);
    } else {
        j["roles"] = nullptr;
    }
    return j;
}

inline std::string graph_to_json_string(const Graph& g) {
    return graph_to_json(g).dump(2) + "\n";
}

inline Graph graph_from_json(const ordered_json& j) {
    if (!j.is_object()) throw validity_error("graph JSON: expected an object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw validity_error("graph JSON: missing integer field 'n'");
    int n = j["n"].get<int>();

    if (!j.contains("edges") || !j["edges"].is_array())
        throw validity_error("graph JSON: missing array field 'edges'");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw validity_error("graph JSON: each edge must be a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }

    std::optional<FamilySpec> family;
    if (j.contains("family") && !j["family"].is_null()) {
        const auto& f = j["family"];
        if (!f.is_object() || !f.contains("name") || !f["name"].is_string())
            throw validity_error("graph JSON: family must be null or {name, params}");
        auto name = family_from_name(f["name"].get<std::string>());
        if (!name)
            throw validity_error("graph JSON: unknown family name '" +
                                 f["name"].get<std::string>() + "'");
        FamilySpec spec{*name, {}};
        if (f.contains("params") && !f["params"].is_null()) {
            if (!f["params"].is_array())
                throw validity_error("graph JSON: family params must be an array");
            for (const auto& p : f["params"]) {
                if (!p.is_number_integer())
                    throw validity_error("graph JSON: family params must be integers");
                spec.params.push_back(p.get<int>());
            }
        }
        family = std::move(spec);
    }

    RoleMap roles;
    if (j.contains("roles") && !j["roles"].is_null()) {
        if (!j["roles"].is_object())
            throw validity_error("graph JSON: roles must be null or an object");
        for (const auto& [key, val] : j["roles"].items()) {
            int v;
            try {
                std::size_t pos = 0;
                v = std::stoi(key, &pos);
                if (pos != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw validity_error("graph JSON: role key '" + key +
                                     "' is not a vertex index");
            }
            if (!val.is_string())
                throw validity_error("graph JSON: role values must be strings");
            auto r = role_from_name(val.get<std::string>());
            if (!r)
                throw validity_error("graph JSON: unknown role tag '" +
                                     val.get<std::string>() + "'");
            roles[v] = *r;
        }
    }

    Graph g = Graph::from_edges(n, edges, family, roles);

    // A parametric family tag pins the exact labeling; verify it.
    if (family) {
        switch (family->name) {
            case Family::Join:
            case Family::Corona:
            case Family::Custom:
                break;  // composite tags carry no rebuildable structure
            default: {
                Graph expected = build_family(*family);
                if (!(expected == g))
                    throw validity_error(
                        "graph JSON: family metadata does not match the structure "
                        "under the fixed labeling");
                if (g.roles().empty())
                    g = expected;  // adopt the canonical role tags
                else if (expected.roles() != g.roles())
                    throw validity_error(
                        "graph JSON: role tags contradict the family labeling");
            }
        }
    }
    return g;
}

inline Graph graph_from_json_string(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validity_error(std::string("graph JSON: parse error: ") + e.what());
    }
    return graph_from_json(j);
}

// Polynomial JSON: decimal-string coefficients, constant term first.
inline ordered_json polynomial_to_json(const Polynomial& p) {
    ordered_json j;
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline Polynomial polynomial_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw validity_error("polynomial JSON: expected {\"coeffs\": [...]}");
    std::vector<BigInt> cs;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string())
            throw validity_error("polynomial JSON: coefficients must be decimal strings");
        cs.push_back(BigInt::from_string(c.get<std::string>()));
    }
    return Polynomial::from_coeffs(std::move(cs));
}

}  // namespace visipoly
