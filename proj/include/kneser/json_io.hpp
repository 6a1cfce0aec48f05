// JSON file formats. Ground elements, vertex indices and colors are 1-based
// on the wire; serialization is deterministic (canonical orders, sorted keys).
#ifndef KNESER_JSON_IO_HPP
#define KNESER_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "kneser/bounds.hpp"
#include "kneser/coloring.hpp"
#include "kneser/core.hpp"
#include "kneser/defect.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/representation.hpp"

namespace kneser {

using nlohmann::json;

namespace detail {

inline json require_key(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw input_error(std::string("missing key '") + key + "'");
    return j.at(key);
}

inline int as_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw input_error(std::string(what) + " must be an integer");
    return j.get<int>();
}

} // namespace detail

// ---- set systems: {"n": int, "s": [int], "sets": [[int]]} ----

inline json to_json(const SetSystem& system) {
    json sets = json::array();
    for (Mask m : system.members()) sets.push_back(elements_of(m));
    return json{{"n", system.ground().n()},
                {"s", system.ground().s()},
                {"sets", sets}};
}

inline SetSystem parse_set_system(const json& j) {
    const int n = detail::as_int(detail::require_key(j, "n"), "n");
    json js = detail::require_key(j, "s");
    if (!js.is_array()) throw input_error("'s' must be an array");
    std::vector<int> s;
    for (const json& v : js) s.push_back(detail::as_int(v, "s entry"));
    GroundContext ground(n, std::move(s));
    json jsets = detail::require_key(j, "sets");
    if (!jsets.is_array()) throw input_error("'sets' must be an array");
    std::vector<Mask> members;
    for (const json& set : jsets) {
        if (!set.is_array()) throw input_error("each set must be an array");
        std::vector<int> elements;
        for (const json& e : set) elements.push_back(detail::as_int(e, "element"));
        members.push_back(mask_of(elements, n));
    }
    return SetSystem(std::move(ground), std::move(members));
}

// ---- hypergraphs: {"vertices", "r", "multiset", "edges": [[[v,mult]..]..]} ----

inline json to_json(const Hypergraph& h) {
    json edges = json::array();
    for (const MultisetEdge& e : h.edges()) {
        json pairs = json::array();
        for (int v = 0; v < h.vertex_count(); ++v) {
            if (e.mult[static_cast<size_t>(v)] > 0)
                pairs.push_back(json::array(
                    {v + 1, e.mult[static_cast<size_t>(v)]}));
        }
        edges.push_back(pairs);
    }
    return json{{"vertices", h.vertex_count()},
                {"r", h.r()},
                {"multiset", h.multiset_allowed()},
                {"edges", edges}};
}

inline Hypergraph parse_hypergraph(const json& j) {
    const int vertices =
        detail::as_int(detail::require_key(j, "vertices"), "vertices");
    const int r = detail::as_int(detail::require_key(j, "r"), "r");
    json jm = detail::require_key(j, "multiset");
    if (!jm.is_boolean()) throw input_error("'multiset' must be a boolean");
    json jedges = detail::require_key(j, "edges");
    if (!jedges.is_array()) throw input_error("'edges' must be an array");
    std::vector<MultisetEdge> edges;
    for (const json& jedge : jedges) {
        if (!jedge.is_array()) throw input_error("each edge must be an array");
        std::vector<int> mult(static_cast<size_t>(vertices), 0);
        for (const json& pair : jedge) {
            if (!pair.is_array() || pair.size() != 2)
                throw input_error("edge entries must be [vertex, multiplicity]");
            const int v = detail::as_int(pair.at(0), "vertex index");
            const int t = detail::as_int(pair.at(1), "multiplicity");
            if (v < 1 || v > vertices)
                throw input_error("vertex index out of range");
            if (t < 1) throw input_error("multiplicity must be >= 1");
            mult[static_cast<size_t>(v - 1)] += t;
        }
        edges.emplace_back(std::move(mult));
    }
    return Hypergraph(vertices, r, jm.get<bool>(), std::move(edges));
}

// ---- colorings: {"colors": m, "assignment": [int]} ----

inline json to_json(const Coloring& c) {
    return json{{"colors", c.colors}, {"assignment", c.assignment}};
}

inline Coloring parse_coloring(const json& j) {
    Coloring c;
    c.colors = detail::as_int(detail::require_key(j, "colors"), "colors");
    json ja = detail::require_key(j, "assignment");
    if (!ja.is_array()) throw input_error("'assignment' must be an array");
    for (const json& v : ja)
        c.assignment.push_back(detail::as_int(v, "assignment entry"));
    return c;
}

// ---- defect certificates: {"value": int, "covers": [[int]]} ----

inline json to_json(const DefectCertificate& cert) {
    json covers = json::array();
    for (Mask cover : cert.covers) covers.push_back(elements_of(cover));
    return json{{"value", cert.value}, {"covers", covers}};
}

inline DefectCertificate parse_defect_certificate(const json& j, int n) {
    DefectCertificate cert;
    json jv = detail::require_key(j, "value");
    if (!jv.is_number_integer()) throw input_error("'value' must be an integer");
    cert.value = jv.get<long long>();
    json jcovers = detail::require_key(j, "covers");
    if (!jcovers.is_array()) throw input_error("'covers' must be an array");
    for (const json& cover : jcovers) {
        if (!cover.is_array()) throw input_error("each cover must be an array");
        std::vector<int> elements;
        for (const json& e : cover) elements.push_back(detail::as_int(e, "element"));
        cert.covers.push_back(mask_of(elements, n));
    }
    return cert;
}

// ---- representations ----
// {"n", "r", "complement_edges": ["e:..."], "sets": [[label]]}; sets are in
// original-vertex order and labels are ints for 1..n, "e:<sorted multiset>"
// for complement-edge elements.

inline std::string complement_edge_label(const MultisetEdge& e) {
    std::string label = "e:";
    bool first = true;
    for (int v = 0; v < static_cast<int>(e.mult.size()); ++v) {
        for (int t = 0; t < e.mult[static_cast<size_t>(v)]; ++t) {
            if (!first) label += ",";
            label += std::to_string(v + 1);
            first = false;
        }
    }
    return label;
}

inline json to_json(const Representation& rep) {
    const int n = static_cast<int>(rep.vertex_map.size());
    json labels = json::array();
    for (const MultisetEdge& e : rep.complement_edges)
        labels.push_back(complement_edge_label(e));
    json sets = json::array();
    for (int i = 0; i < n; ++i) {
        const Mask member = rep.system.member(rep.vertex_map[static_cast<size_t>(i)]);
        json set = json::array();
        for (int g : elements_of(member)) {
            if (g <= n) set.push_back(g);
            else set.push_back(labels.at(static_cast<size_t>(g - n - 1)));
        }
        sets.push_back(set);
    }
    return json{{"n", n}, {"r", rep.r}, {"complement_edges", labels}, {"sets", sets}};
}

inline Representation parse_representation(const json& j) {
    const int n = detail::as_int(detail::require_key(j, "n"), "n");
    const int r = detail::as_int(detail::require_key(j, "r"), "r");
    json jlabels = detail::require_key(j, "complement_edges");
    if (!jlabels.is_array()) throw input_error("'complement_edges' must be an array");

    std::vector<MultisetEdge> complement;
    std::vector<std::string> labels;
    for (const json& jl : jlabels) {
        if (!jl.is_string()) throw input_error("complement edge labels must be strings");
        const std::string label = jl.get<std::string>();
        if (label.rfind("e:", 0) != 0)
            throw input_error("complement edge label must start with 'e:'");
        std::vector<int> mult(static_cast<size_t>(n), 0);
        std::string body = label.substr(2);
        size_t pos = 0;
        while (pos < body.size()) {
            size_t comma = body.find(',', pos);
            if (comma == std::string::npos) comma = body.size();
            const int v = std::stoi(body.substr(pos, comma - pos));
            if (v < 1 || v > n) throw input_error("label vertex out of range");
            ++mult[static_cast<size_t>(v - 1)];
            pos = comma + 1;
        }
        complement.emplace_back(std::move(mult));
        labels.push_back(label);
    }

    const int t = static_cast<int>(complement.size());
    GroundContext ground(n + t, std::vector<int>(static_cast<size_t>(n + t), r - 1));
    json jsets = detail::require_key(j, "sets");
    if (!jsets.is_array() || static_cast<int>(jsets.size()) != n)
        throw input_error("'sets' must list one set per original vertex");
    std::vector<Mask> members;
    for (const json& jset : jsets) {
        if (!jset.is_array()) throw input_error("each set must be an array");
        Mask m = 0;
        for (const json& jl : jset) {
            if (jl.is_number_integer()) {
                const int g = jl.get<int>();
                if (g < 1 || g > n) throw input_error("set element out of range");
                m |= Mask{1} << (g - 1);
            } else if (jl.is_string()) {
                const std::string label = jl.get<std::string>();
                auto it = std::find(labels.begin(), labels.end(), label);
                if (it == labels.end())
                    throw input_error("set references unknown complement edge");
                m |= Mask{1} << (n + (it - labels.begin()));
            } else {
                throw input_error("set elements must be ints or labels");
            }
        }
        members.push_back(m);
    }

    SetSystem system(ground, members);
    std::vector<int> vertex_map(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        for (int idx = 0; idx < system.size(); ++idx) {
            if (system.member(idx) == members[static_cast<size_t>(i)]) {
                vertex_map[static_cast<size_t>(i)] = idx;
                break;
            }
        }
    }
    return Representation{std::move(ground), std::move(system),
                          std::move(vertex_map), std::move(complement), r};
}

// ---- bound reports: a flat record ----

inline json to_json(const BoundReport& report) {
    json j{{"instance", report.instance},
           {"n", report.n},
           {"r", report.r},
           {"s", report.s},
           {"defect", report.defect},
           {"condition_met", report.condition_met}};
    j["defect_lower_bound"] = report.defect_lower_bound
                                  ? json(*report.defect_lower_bound)
                                  : json(nullptr);
    j["chi_KG"] = report.chi_KG ? json(*report.chi_KG) : json(nullptr);
    j["chi_kg"] = report.chi_kg ? json(*report.chi_kg) : json(nullptr);
    j["upper_star"] = report.upper_star ? json(*report.upper_star) : json(nullptr);
    return j;
}

} // namespace kneser

#endif // KNESER_JSON_IO_HPP
