#pragma once

#include <cctype>
#include <string>
#include <vector>

#include <json.hpp>

#include "paract/algebra.hpp"
#include "paract/globalization.hpp"
#include "paract/group.hpp"
#include "paract/orbits.hpp"
#include "paract/partial_action.hpp"
#include "paract/tower.hpp"

namespace paract {

using nlohmann::json;

// ---- groups ------------------------------------------------------------

/// Accepts either a named group ("cyclic:4", "s3", "dihedral:3",
/// "klein", "trivial") or a {"order", "mul"} object.
inline FiniteGroup parse_group(const json& j) {
    if (j.is_string()) {
        std::string name = j.get<std::string>();
        auto param = [&](const std::string& prefix) -> int {
            return std::stoi(name.substr(prefix.size()));
        };
        if (name == "trivial")
            return cyclic_group(1);
        if (name == "klein")
            return klein_four();
        if (name == "s3")
            return symmetric3();
        if (name.rfind("cyclic:", 0) == 0)
            return cyclic_group(param("cyclic:"));
        if (name.rfind("dihedral:", 0) == 0)
            return dihedral_group(param("dihedral:"));
        throw error(errc::bad_input, "unknown group name '" + name + "'");
    }
    if (!j.is_object() || !j.contains("order") || !j.contains("mul"))
        throw error(errc::bad_input, "group must be a name or an {order, mul} object");
    auto table = j.at("mul").get<std::vector<std::vector<int>>>();
    FiniteGroup g = validate_group(table);
    if (g.order != j.at("order").get<int>())
        throw error(errc::bad_input, "declared order does not match the table");
    return g;
}

inline json group_to_json(const FiniteGroup& g) {
    return json{{"order", g.order}, {"mul", g.mul}};
}

// ---- partial and global actions -----------------------------------------

inline PartialAction parse_partial_action(const json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("space_size") ||
        !j.contains("graphs"))
        throw error(errc::bad_input, "partial_action needs group, space_size and graphs");
    PartialAction pa;
    pa.group = parse_group(j.at("group"));
    pa.space_size = j.at("space_size").get<int>();
    if (pa.space_size < 1)
        throw error(errc::bad_input, "space_size must be positive");
    pa.graphs.assign(pa.group.order, {});
    for (const auto& [key, value] : j.at("graphs").items()) {
        int g = std::stoi(key);
        if (g < 0 || g >= pa.group.order)
            throw error(errc::bad_input, "graph key out of range: " + key);
        for (const auto& pair : value) {
            if (!pair.is_array() || pair.size() != 2)
                throw error(errc::bad_input, "graph entries must be [x, y] pairs");
            pa.graphs[g].push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
    }
    return pa;
}

inline json partial_action_to_json(const PartialAction& pa) {
    json graphs = json::object();
    for (int g = 0; g < pa.group.order; ++g) {
        json list = json::array();
        for (const auto& [x, y] : pa.graphs[g])
            list.push_back(json::array({x, y}));
        graphs[std::to_string(g)] = std::move(list);
    }
    return json{{"group", group_to_json(pa.group)},
                {"space_size", pa.space_size},
                {"graphs", std::move(graphs)}};
}

inline GlobalAction parse_global_action(const json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("space_size") ||
        !j.contains("perm"))
        throw error(errc::bad_input, "global_action needs group, space_size and perm");
    GlobalAction u;
    u.group = parse_group(j.at("group"));
    u.space_size = j.at("space_size").get<int>();
    u.perm.assign(u.group.order, {});
    for (const auto& [key, value] : j.at("perm").items()) {
        int g = std::stoi(key);
        if (g < 0 || g >= u.group.order)
            throw error(errc::bad_input, "perm key out of range: " + key);
        u.perm[g] = value.get<std::vector<int>>();
    }
    validate_global_action(u);
    return u;
}

inline json global_action_to_json(const GlobalAction& u) {
    json perm = json::object();
    for (int g = 0; g < u.group.order; ++g)
        perm[std::to_string(g)] = u.perm[g];
    return json{{"group", group_to_json(u.group)},
                {"space_size", u.space_size},
                {"perm", std::move(perm)}};
}

// ---- instance files -------------------------------------------------------

struct InstanceFile {
    std::string kind; // group | partial_action | global_action
    std::string name; // optional
    json payload;
};

inline InstanceFile parse_instance(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw error(errc::bad_input, "instance file needs a 'kind' field");
    InstanceFile f;
    f.kind = j.at("kind").get<std::string>();
    if (f.kind != "group" && f.kind != "partial_action" && f.kind != "global_action")
        throw error(errc::bad_input, "unknown kind '" + f.kind + "'");
    if (j.contains("name"))
        f.name = j.at("name").get<std::string>();
    f.payload = j;
    f.payload.erase("kind");
    f.payload.erase("name");
    // Parse eagerly so schema errors surface here.
    if (f.kind == "group")
        parse_group(f.payload.contains("mul") ? f.payload : f.payload.at("group"));
    else if (f.kind == "partial_action")
        parse_partial_action(f.payload);
    else
        parse_global_action(f.payload);
    return f;
}

inline json instance_to_json(const std::string& kind, json payload,
                             const std::string& name = "") {
    payload["kind"] = kind;
    if (!name.empty())
        payload["name"] = name;
    return payload;
}

// ---- result serializers -----------------------------------------------

inline json report_to_json(const ValidationReport& r) {
    auto clause_list = [](const std::vector<Violation>& vs) {
        json out = json::array();
        for (const auto& v : vs)
            out.push_back(json{{"clause", clause_name(v.clause)},
                               {"g", v.g},
                               {"h", v.h},
                               {"x", v.x},
                               {"detail", v.detail}});
        return out;
    };
    return json{{"valid", r.valid()},
                {"function_axioms", clause_list(r.function_axioms)},
                {"family_axioms", clause_list(r.family_axioms)}};
}

inline json quotient_to_json(const OrbitQuotient& q) {
    return json{{"classes", q.classes}, {"class_of", q.class_of}, {"subgroup", q.subgroup}};
}

inline json section_to_json(const Section& s) {
    return json{{"from", quotient_to_json(s.from)},
                {"to", quotient_to_json(s.to)},
                {"choice", s.choice}};
}

inline json envelope_to_json(const EnvelopingSpace& env) {
    json classes = json::array();
    for (const auto& cls : env.classes) {
        json c = json::array();
        for (auto [g, x] : cls)
            c.push_back(json::array({g, x}));
        classes.push_back(std::move(c));
    }
    json mu = json::object();
    for (int g = 0; g < env.mu.group.order; ++g)
        mu[std::to_string(g)] = env.mu.perm[g];
    return json{{"classes", std::move(classes)}, {"mu", std::move(mu)}, {"iota", env.iota}};
}

inline json br_report_to_json(const BRReport& r) {
    return json{{"element_count", r.element_count},
                {"idempotent_count", r.idempotent_count},
                {"count_matches_formula", r.count_matches_formula},
                {"associative", r.associative},
                {"identity_ok", r.identity_ok},
                {"inverses_unique", r.inverses_unique},
                {"idempotents_commute", r.idempotents_commute},
                {"pass", r.pass()},
                {"violations", r.violations}};
}

inline json groupoid_report_to_json(const GroupoidReport& r) {
    return json{{"arrow_count", r.arrow_count},
                {"component_count", r.component_count},
                {"involution_ok", r.involution_ok},
                {"units_ok", r.units_ok},
                {"associativity_ok", r.associativity_ok},
                {"components_match_orbits", r.components_match_orbits},
                {"trivial_isotropy", r.trivial_isotropy},
                {"pass", r.pass()},
                {"violations", r.violations}};
}

// ---- small parsers shared with the CLI ----------------------------------

/// "1,2,3" -> {1,2,3}
inline std::vector<int> parse_element_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty())
                out.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    return out;
}

/// "0,1,2,3;0,2;0" -> chain of subgroups
inline std::vector<std::vector<int>> parse_chain(const std::string& s) {
    std::vector<std::vector<int>> out;
    std::string cur;
    for (char ch : s + ";") {
        if (ch == ';') {
            if (!cur.empty())
                out.push_back(parse_element_list(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

} // namespace paract
