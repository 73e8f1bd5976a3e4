#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "ramsey/embedding.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// K_{n-1,n-1}: triangle-free, and its complement is two (n-1)-cliques, so
/// it certifies the lower bound on 2n-2 vertices.
inline Graph extremal_graph(int n) {
    if (n < 2) throw PreconditionError("extremal construction needs n >= 2");
    return Graph::complete_bipartite(n - 1, n - 1);
}

namespace detail {

inline std::vector<int> sorted_neighbor_degrees(const Graph& g, int v) {
    std::vector<int> out;
    for (int w : g.neighbors(v)) out.push_back(g.degree(w));
    std::sort(out.rbegin(), out.rend());
    return out;
}

} // namespace detail

/**
 * Exact subgraph containment by backtracking: pattern vertices are ordered
 * connected-first by degree, candidates are pruned by degree and by the
 * sorted neighbor-degree multiset. Intended for small patterns.
 */
inline std::optional<Embedding> brute_contains(const Graph& host, const Graph& pattern) {
    const int np = pattern.order(), nh = host.order();
    if (np > nh) return std::nullopt;
    if (np == 0) return Embedding{pattern, host, {}, false};

    // order: highest degree first, then most mapped neighbors
    std::vector<int> order;
    std::vector<bool> placed(np, false);
    for (int step = 0; step < np; ++step) {
        int best = -1, best_anchor = -1, best_deg = -1;
        for (int v = 0; v < np; ++v) {
            if (placed[v]) continue;
            int anchors = 0;
            for (int u : order) anchors += pattern.has_edge(u, v);
            int deg = pattern.degree(v);
            if (anchors > best_anchor || (anchors == best_anchor && deg > best_deg)) {
                best = v;
                best_anchor = anchors;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }

    std::vector<std::vector<int>> host_nd(nh), pat_nd(np);
    for (int v = 0; v < nh; ++v) host_nd[v] = detail::sorted_neighbor_degrees(host, v);
    for (int v = 0; v < np; ++v) pat_nd[v] = detail::sorted_neighbor_degrees(pattern, v);

    std::vector<int> map(np, -1);
    Bitset used(nh);
    auto feasible = [&](int p, int h) {
        if (host.degree(h) < pattern.degree(p)) return false;
        const auto& hd = host_nd[h];
        const auto& pd = pat_nd[p];
        for (std::size_t i = 0; i < pd.size(); ++i)
            if (hd[i] < pd[i]) return false;
        for (int q : pattern.neighbors(p))
            if (map[q] != -1 && !host.has_edge(map[q], h)) return false;
        return true;
    };
    auto dfs = [&](auto&& self, int step) -> bool {
        if (step == np) return true;
        int p = order[step];
        int anchor = -1;
        for (int q : pattern.neighbors(p))
            if (map[q] != -1) { anchor = map[q]; break; }
        Bitset cand = anchor >= 0 ? host.neighbors(anchor) : Bitset::full(nh);
        cand -= used;
        for (int h : cand) {
            if (!feasible(p, h)) continue;
            map[p] = h;
            used.set(h);
            if (self(self, step + 1)) return true;
            map[p] = -1;
            used.reset(h);
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return Embedding{pattern, host, std::move(map), false};
}

namespace detail {

inline int pair_index(int i, int j) { // i < j, column-major upper triangle
    return j * (j - 1) / 2 + i;
}

inline std::uint64_t canonical_mask(std::uint64_t mask, int n,
                                    const std::vector<std::vector<int>>& remaps) {
    std::uint64_t best = ~std::uint64_t{0};
    const int nbits = n * (n - 1) / 2;
    for (const auto& table : remaps) {
        std::uint64_t out = 0;
        for (int b = 0; b < nbits; ++b)
            if ((mask >> b) & 1) out |= std::uint64_t{1} << table[b];
        best = std::min(best, out);
    }
    return best;
}

inline std::vector<std::vector<int>> pair_remaps(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> remaps;
    do {
        std::vector<int> table(n * (n - 1) / 2);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                int a = perm[i], b = perm[j];
                if (a > b) std::swap(a, b);
                table[pair_index(i, j)] = pair_index(a, b);
            }
        remaps.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return remaps;
}

} // namespace detail

/**
 * Orderly generation with canonical-form rejection: every graph on n
 * vertices up to isomorphism, grown one vertex at a time, deduplicated by
 * the minimum adjacency mask over all relabelings. Practical for n <= 8.
 */
inline std::vector<std::vector<std::uint64_t>> canonical_mask_levels(int n) {
    if (n < 1 || n > 8) throw PreconditionError("canonical enumeration supports 1..8 vertices");
    std::vector<std::vector<std::uint64_t>> levels(n + 1);
    levels[1] = {0};
    for (int k = 2; k <= n; ++k) {
        auto remaps = detail::pair_remaps(k);
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> out;
        for (std::uint64_t base : levels[k - 1]) {
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
                std::uint64_t mask = base;
                for (int i = 0; i < k - 1; ++i)
                    if ((nb >> i) & 1) mask |= std::uint64_t{1} << detail::pair_index(i, k - 1);
                std::uint64_t canon = detail::canonical_mask(mask, k, remaps);
                if (seen.insert(canon).second) out.push_back(canon);
            }
        }
        std::sort(out.begin(), out.end());
        levels[k] = std::move(out);
    }
    return levels;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mask >> detail::pair_index(i, j)) & 1) g.add_edge(i, j);
    return g;
}

inline std::vector<Graph> canonical_graphs(int n) {
    auto levels = canonical_mask_levels(n);
    std::vector<Graph> out;
    out.reserve(levels[n].size());
    for (std::uint64_t mask : levels[n]) out.push_back(graph_from_mask(n, mask));
    return out;
}

/**
 * Exact tiny-scale Ramsey numbers: the smallest N such that every graph on N
 * vertices contains `h` or its complement contains `k`, checked over the
 * canonical enumeration level by level. Containment is monotone in N, so the
 * first fully-passing level is the answer.
 */
inline std::optional<int> brute_ramsey(const Graph& h, const Graph& k, int n_max) {
    if (n_max > 8) throw PreconditionError("brute_ramsey budget capped at 8 vertices");
    auto levels = canonical_mask_levels(n_max);
    for (int n = 1; n <= n_max; ++n) {
        bool all = true;
        for (std::uint64_t mask : levels[n]) {
            Graph g = graph_from_mask(n, mask);
            if (!brute_contains(g, h) && !brute_contains(g.complement(), k)) {
                all = false;
                break;
            }
        }
        if (all) return n;
    }
    return std::nullopt;
}

} // namespace ramsey
