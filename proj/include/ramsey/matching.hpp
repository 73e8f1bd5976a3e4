#pragma once

#include <utility>
#include <vector>

#include "ramsey/bitset.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/**
 * Result of a matching computation. When `certified` is set the matching is
 * maximum and `witness_set` is a Tutte-Berge set U with
 *   2|M| = |active| - oc(G[active] - U) + |U|,
 * where oc counts odd components. Early-stopped runs are not certified.
 */
struct MatchingResult {
    std::vector<std::pair<int, int>> edges;
    Bitset covered;
    Bitset witness_set;
    bool certified = false;
};

namespace detail {

/// Edmonds blossom search over the subgraph induced by an active vertex set.
class Blossom {
public:
    Blossom(const Graph& g, const Bitset& active)
        : g_(g), active_(active), n_(g.order()), match_(n_, -1), parent_(n_, -1),
          base_(n_), used_(n_), blossom_(n_) {}

    /// Grows the matching one augmenting path at a time; stops early once
    /// `target` edges are reached (target <= 0 runs to optimality).
    MatchingResult run(int target) {
        int size = 0;
        bool stopped_early = false;
        for (int v : active_) {
            if (match_[v] != -1) continue;
            if (target > 0 && size >= target) { stopped_early = true; break; }
            int tail = find_path(v);
            if (tail != -1) {
                augment(tail);
                ++size;
            }
        }
        if (target > 0 && size >= target) stopped_early = true;

        MatchingResult out;
        out.covered = Bitset(n_);
        for (int v : active_)
            if (match_[v] != -1) {
                out.covered.set(v);
                if (v < match_[v]) out.edges.emplace_back(v, match_[v]);
            }
        out.witness_set = Bitset(n_);
        if (!stopped_early) {
            // union of outer vertices over the failed searches from every
            // exposed vertex = the Gallai-Edmonds set D; U = N(D) - D
            Bitset d(n_);
            for (int v : active_)
                if (match_[v] == -1) {
                    find_path(v);
                    d |= used_;
                }
            Bitset u(n_);
            for (int v : d) u |= g_.neighbors(v);
            u &= active_;
            u -= d;
            out.witness_set = u;
            out.certified = true;
        }
        return out;
    }

private:
    int lca(int a, int b) {
        Bitset on_path(n_);
        for (;;) {
            a = base_[a];
            on_path.set(a);
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (on_path.test(b)) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_.set(base_[v]);
            blossom_.set(base_[match_[v]]);
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        used_.clear();
        for (int v : active_) {
            parent_[v] = -1;
            base_[v] = v;
        }
        used_.set(root);
        queue_.clear();
        queue_.push_back(root);
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            int v = queue_[qi];
            Bitset nbrs = g_.neighbors(v) & active_;
            for (int to : nbrs) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int curbase = lca(v, to);
                    blossom_.clear();
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int u : active_)
                        if (blossom_.test(base_[u])) {
                            base_[u] = curbase;
                            if (!used_.test(u)) {
                                used_.set(u);
                                queue_.push_back(u);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_.set(match_[to]);
                    queue_.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int u) {
        while (u != -1) {
            int pv = parent_[u], ppv = match_[pv];
            match_[u] = pv;
            match_[pv] = u;
            u = ppv;
        }
    }

    const Graph& g_;
    const Bitset& active_;
    int n_;
    std::vector<int> match_, parent_, base_;
    Bitset used_, blossom_;
    std::vector<int> queue_;
};

} // namespace detail

/// Maximum matching in the subgraph induced by `active`. `stop_at > 0`
/// returns early (uncertified) once that many edges are found.
inline MatchingResult max_matching_in(const Graph& g, const Bitset& active, int stop_at = 0) {
    return detail::Blossom(g, active).run(stop_at);
}

inline MatchingResult max_matching(const Graph& g) {
    return max_matching_in(g, g.vertex_set());
}

/// Checks the Tutte-Berge certificate: 2|M| = |active| - oc(G[active]-U) + |U|.
inline bool verify_tutte_berge(const Graph& g, const Bitset& active, const MatchingResult& r) {
    if (!r.certified) return false;
    Bitset rest = active;
    rest -= r.witness_set;
    int odd = 0;
    for (const Bitset& comp : g.components(rest))
        if (comp.count() % 2 == 1) ++odd;
    return 2 * int(r.edges.size()) == active.count() - odd + r.witness_set.count();
}

} // namespace ramsey
