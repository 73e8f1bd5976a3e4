#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ramsey/embedding.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/tree.hpp"

namespace ramsey {

using ordered_json = nlohmann::ordered_json;

/// {"n": int, "edges": [[u,v],...]}
inline ordered_json tree_to_json(const Tree& t) {
    ordered_json j;
    j["n"] = t.order();
    j["edges"] = ordered_json::array();
    for (auto [u, v] : t.edges()) j["edges"].push_back({u, v});
    return j;
}

inline std::vector<std::pair<int, int>> edges_from_json(const ordered_json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw PreconditionError("bad edge entry in JSON");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return edges;
}

inline Tree tree_from_json(const ordered_json& j) {
    return Tree(j.at("n").get<int>(), edges_from_json(j));
}

/// Unicyclic JSON adds "t1","t2" (computed when absent).
inline ordered_json unicyclic_to_json(const UnicyclicGraph& u) {
    ordered_json j;
    j["n"] = u.order();
    j["edges"] = ordered_json::array();
    for (auto [a, b] : u.edges()) j["edges"].push_back({a, b});
    if (u.t1() >= 0) {
        j["t1"] = u.t1();
        j["t2"] = u.t2();
    }
    return j;
}

inline UnicyclicGraph unicyclic_from_json(const ordered_json& j) {
    int t1 = j.value("t1", -1);
    int t2 = j.value("t2", -1);
    return UnicyclicGraph(j.at("n").get<int>(), edges_from_json(j), t1, t2);
}

/**
 * Witness JSON with a stable field order for golden tests:
 * {"kind": "fan"|"tree"|"unicyclic", "center": int?, "map": [[p,h],...],
 *  "m": int, "n": int} plus "t1","t2" image fields for unicyclic kinds.
 */
inline ordered_json witness_to_json(const Witness& w) {
    ordered_json j;
    switch (w.kind) {
    case WitnessKind::FanInG: j["kind"] = "fan"; break;
    case WitnessKind::TreeInComplement: j["kind"] = "tree"; break;
    case WitnessKind::UnicyclicInComplement: j["kind"] = "unicyclic"; break;
    }
    if (w.kind == WitnessKind::FanInG) j["center"] = w.center;
    j["map"] = ordered_json::array();
    for (int v = 0; v < int(w.embedding.map.size()); ++v)
        j["map"].push_back({v, w.embedding.map[v]});
    j["m"] = w.m;
    j["n"] = w.n;
    if (w.kind == WitnessKind::UnicyclicInComplement) {
        j["t1"] = w.t1_image;
        j["t2"] = w.t2_image;
    }
    return j;
}

} // namespace ramsey
