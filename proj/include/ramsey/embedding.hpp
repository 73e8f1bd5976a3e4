#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/**
 * Injective map from pattern vertices to host vertices. When
 * `into_complement` is set, pattern edges must land on non-edges of the host
 * (the embedding lives in the host's complement).
 */
struct Embedding {
    Graph pattern;
    Graph host;
    std::vector<int> map; // indexed by pattern vertex
    bool into_complement = false;
};

struct CheckResult {
    bool ok = true;
    std::string violation;

    explicit operator bool() const { return ok; }
};

/// Accepts iff the map is injective, in range, and every pattern edge lands
/// on a host edge (or host non-edge when targeting the complement). The
/// first violation found is named in the result.
inline CheckResult check_embedding(const Embedding& e) {
    const int np = e.pattern.order();
    if (int(e.map.size()) != np)
        return {false, "map size does not match pattern order"};
    std::vector<int> seen(e.host.order(), -1);
    for (int v = 0; v < np; ++v) {
        int img = e.map[v];
        if (img < 0 || img >= e.host.order())
            return {false, "image of vertex " + std::to_string(v) + " out of range"};
        if (seen[img] != -1)
            return {false, "vertices " + std::to_string(seen[img]) + " and " +
                               std::to_string(v) + " share image " + std::to_string(img)};
        seen[img] = v;
    }
    for (auto [u, v] : e.pattern.edges()) {
        bool host_edge = e.host.has_edge(e.map[u], e.map[v]);
        bool want_edge = !e.into_complement;
        if (host_edge != want_edge)
            return {false, "pattern edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") maps to " + (host_edge ? "an edge" : "a non-edge") +
                               " (" + std::to_string(e.map[u]) + "," + std::to_string(e.map[v]) + ")"};
    }
    return {};
}

enum class WitnessKind { FanInG, TreeInComplement, UnicyclicInComplement };

/**
 * A verified certificate for one side of the Ramsey alternative: a fan F_m in
 * the host, or a tree/unicyclic pattern in the host's complement. The
 * embedding is self-verifying via check_embedding.
 */
struct Witness {
    WitnessKind kind;
    Embedding embedding;
    int m = 0;
    int n = 0;
    int center = -1;          // fan witnesses: host id of the apex
    int t1_image = -1;        // unicyclic witnesses: host images of t1, t2
    int t2_image = -1;
};

/// F_m: m triangles sharing the apex vertex 0; pairs are (2i+1, 2i+2).
inline Graph fan_pattern(int m) {
    Graph g(2 * m + 1);
    for (int i = 0; i < m; ++i) {
        g.add_edge(0, 2 * i + 1);
        g.add_edge(0, 2 * i + 2);
        g.add_edge(2 * i + 1, 2 * i + 2);
    }
    return g;
}

} // namespace ramsey
