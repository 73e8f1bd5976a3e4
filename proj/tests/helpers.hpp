#pragma once

// Shared test fixtures and independent oracles. Everything here stays
// independent of the implementation paths it checks.

#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/tree.hpp"

namespace test_support {

using ramsey::Bitset;
using ramsey::Graph;
using ramsey::Tree;

/// Exhaustive maximum matching by branching on the lowest uncovered vertex.
inline int brute_max_matching_size(const Graph& g) {
    Bitset covered(g.order());
    auto rec = [&](auto&& self, int v) -> int {
        while (v < g.order() && covered.test(v)) ++v;
        if (v >= g.order()) return 0;
        covered.set(v);
        int best = self(self, v + 1); // leave v unmatched
        Bitset nb = g.neighbors(v);
        nb -= covered;
        for (int w : nb) {
            covered.set(w);
            best = std::max(best, 1 + self(self, v + 1));
            covered.reset(w);
        }
        covered.reset(v);
        return best;
    };
    return rec(rec, 0);
}

/// Second graph6 decoder, written against the format description with
/// absolute bit positions instead of a rolling mask.
inline Graph alt_parse_graph6(const std::string& s) {
    std::size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(s.at(0)) == 126) {
        n = 0;
        for (int k = 1; k <= 3; ++k) n = n * 64 + (static_cast<unsigned char>(s.at(k)) - 63);
        pos = 4;
    } else {
        n = static_cast<unsigned char>(s.at(0)) - 63;
        pos = 1;
    }
    Graph g{int(n)};
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = static_cast<unsigned char>(s.at(pos + bit / 6)) - 63;
            int shift = 5 - int(bit % 6);
            if ((byte >> shift) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

/// Path of n - leaves vertices with `leaves` extra leaves at the far end.
inline Tree broom(int n, int leaves) {
    std::vector<std::pair<int, int>> es;
    int spine = n - leaves;
    for (int v = 0; v + 1 < spine; ++v) es.emplace_back(v, v + 1);
    for (int v = spine; v < n; ++v) es.emplace_back(spine - 1, v);
    return Tree(n, std::move(es));
}

/// Spine of ceil(n/2) vertices, one leaf hanging from each spine vertex.
inline Tree caterpillar(int n) {
    std::vector<std::pair<int, int>> es;
    int spine = (n + 1) / 2;
    for (int v = 0; v + 1 < spine; ++v) es.emplace_back(v, v + 1);
    for (int v = spine; v < n; ++v) es.emplace_back(v - spine, v);
    return Tree(n, std::move(es));
}

/// Random graph patched up to the requested minimum degree.
inline Graph random_graph_min_degree(int n, double p, int min_deg, std::uint64_t seed) {
    Graph g = ramsey::random_graph(n, p, seed);
    for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n && g.degree(v) < min_deg; ++w)
            if (w != v && !g.has_edge(v, w)) g.add_edge(v, w);
    }
    return g;
}

/// K_{72,72} plus one isolated vertex: the near-extremal host on 145 vertices.
inline Graph near_extremal_145() {
    Graph g(145);
    for (int u = 0; u < 72; ++u)
        for (int v = 72; v < 144; ++v) g.add_edge(u, v);
    return g;
}

} // namespace test_support
