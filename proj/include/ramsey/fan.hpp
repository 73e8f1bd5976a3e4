#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/embedding.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/matching.hpp"

namespace ramsey {

/// Raised when a structure that presumes "no fan" is asked for but the
/// neighborhood matching reaches m edges.
struct FanPresentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A fan F_m sitting in the host: m vertex-disjoint edges inside N(center).
struct FanInHost {
    int center;
    std::vector<std::pair<int, int>> spokes;
};

/**
 * Scans vertices in ascending id order for a neighborhood containing an
 * m-edge matching. Absence is certified: for every vertex the maximum
 * matching in its neighborhood was verified to have fewer than m edges.
 */
inline std::optional<FanInHost> find_fan(const Graph& g, int m) {
    if (m < 1) throw GraphError("fan size must be at least 1");
    for (int v = 0; v < g.order(); ++v) {
        MatchingResult r = max_matching_in(g, g.neighbors(v), m);
        if (int(r.edges.size()) >= m) {
            r.edges.resize(m);
            return FanInHost{v, std::move(r.edges)};
        }
    }
    return std::nullopt;
}

inline Witness fan_witness(const Graph& g, int m, const FanInHost& fan, int n) {
    Embedding e;
    e.pattern = fan_pattern(m);
    e.host = g;
    e.into_complement = false;
    e.map.assign(2 * m + 1, -1);
    e.map[0] = fan.center;
    for (int i = 0; i < m; ++i) {
        e.map[2 * i + 1] = fan.spokes[i].first;
        e.map[2 * i + 2] = fan.spokes[i].second;
    }
    Witness w;
    w.kind = WitnessKind::FanInG;
    w.embedding = std::move(e);
    w.center = fan.center;
    w.m = m;
    w.n = n;
    return w;
}

/// A matched pair labeled so that the x endpoint has the smaller degree
/// into U_v (ties to the lower id).
struct MatchedPair {
    int x, y;
    int du_x, du_y;
};

/**
 * The neighborhood decomposition of a vertex under the no-fan certificate,
 * restricted to the vertex set S: maximum matching M_v in N_S(v), the
 * independent remainder U_v, the split index k separating pairs with
 * d_U(y) <= 1 from the rest, and the derived sets X_v and Y_v.
 */
struct NeighborhoodStructure {
    int center = -1;
    Bitset restriction;
    int degree_s = 0;            // d_S(v)
    std::vector<MatchedPair> pairs;
    int t = 0;
    int split_k = 0;
    Bitset u_set, x_set, y_set;
};

inline NeighborhoodStructure neighborhood_structure(const Graph& g, int v, const Bitset& s, int m) {
    NeighborhoodStructure ns;
    ns.center = v;
    ns.restriction = s;
    Bitset nbhood = g.neighbors(v) & s;
    nbhood.reset(v); // N(v) never contains v, but S might
    ns.degree_s = nbhood.count();

    MatchingResult mr = max_matching_in(g, nbhood);
    ns.t = int(mr.edges.size());
    if (ns.t >= m)
        throw FanPresentError("neighborhood of " + std::to_string(v) +
                              " holds an m-matching; caller should have returned a fan");

    ns.u_set = nbhood;
    ns.u_set -= mr.covered;

    for (auto [a, b] : mr.edges) {
        int da = g.degree_in(a, ns.u_set);
        int db = g.degree_in(b, ns.u_set);
        MatchedPair p;
        if (da < db || (da == db && a < b)) p = {a, b, da, db};
        else p = {b, a, db, da};
        ns.pairs.push_back(p);
    }
    // pairs with d_U(y) <= 1 come first; deterministic order within groups
    std::stable_sort(ns.pairs.begin(), ns.pairs.end(), [](const MatchedPair& l, const MatchedPair& r) {
        int gl = l.du_y >= 2, gr = r.du_y >= 2;
        if (gl != gr) return gl < gr;
        return l.x < r.x;
    });
    ns.split_k = 0;
    while (ns.split_k < ns.t && ns.pairs[ns.split_k].du_y <= 1) ++ns.split_k;

    // B = V(M_v) - {y_{k+1..t}}; Y_v = B plus its neighbors in U_v
    Bitset b_set(g.order());
    for (int i = 0; i < ns.t; ++i) {
        b_set.set(ns.pairs[i].x);
        if (i < ns.split_k) b_set.set(ns.pairs[i].y);
    }
    ns.y_set = b_set;
    for (int w : b_set) ns.y_set |= g.neighbors(w) & ns.u_set;
    ns.x_set = ns.u_set;
    ns.x_set -= ns.y_set;
    return ns;
}

/// Re-verifies every NeighborhoodStructure invariant by direct scan.
inline CheckResult check_neighborhood_structure(const Graph& g, const NeighborhoodStructure& ns, int m) {
    auto fail = [](const std::string& s) { return CheckResult{false, s}; };
    for (int u : ns.u_set)
        if (g.degree_in(u, ns.u_set) > 0) return fail("U_v is not independent");
    for (int i = 0; i < ns.t; ++i) {
        const auto& p = ns.pairs[i];
        if (g.degree_in(p.x, ns.u_set) != p.du_x || g.degree_in(p.y, ns.u_set) != p.du_y)
            return fail("stale pair degrees");
        if (p.du_x > p.du_y) return fail("pair label order violated");
        if (i < ns.split_k && p.du_y > 1) return fail("low-degree pair after split");
        if (i >= ns.split_k && p.du_y < 2) return fail("high-degree pair before split");
    }
    if (ns.x_set.intersects(ns.y_set)) return fail("X_v meets Y_v");
    Bitset xy = ns.x_set | ns.y_set;
    for (int u : ns.x_set)
        if (g.degree_in(u, xy) > 0) return fail("X_v vertex has a neighbor in X_v or Y_v");
    if (ns.u_set.count() < ns.degree_s - 2 * m + 2) return fail("|U_v| bound violated");
    if (ns.x_set.count() < ns.degree_s - 3 * m + 3) return fail("|X_v| bound violated");
    if (ns.y_set.count() > 3 * m - 3) return fail("|Y_v| bound violated");
    if (ns.x_set.count() + ns.y_set.count() < ns.degree_s - m + 1)
        return fail("|X_v| + |Y_v| bound violated");
    return {};
}

} // namespace ramsey
