#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ramsey/bitset.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Undirected simple graph on vertex ids 0..n-1 with dense bit-row adjacency.
 * Symmetric and irreflexive by construction; values are immutable once
 * building is done, so instances can be shared freely across threads.
 */
class Graph {
public:
    Graph() = default;

    explicit Graph(int order) : n_(order), adj_(order, Bitset(order)) {
        if (order < 0) throw GraphError("graph order must be non-negative");
    }

    int order() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw GraphError("self-loops are not allowed");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u].reset(v);
        adj_[v].reset(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    /// d_S(v): number of neighbors of v inside the vertex set s.
    int degree_in(int v, const Bitset& s) const {
        return neighbors(v).intersection_count(s);
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    int min_degree() const {
        if (n_ == 0) return 0;
        int d = n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    long long edge_count() const {
        long long twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next_set(u); v >= 0; v = adj_[u].next_set(v))
                out.emplace_back(u, v);
        return out;
    }

    /// Materializes the complement; an involution that preserves order.
    Graph complement() const {
        Graph g(n_);
        for (int v = 0; v < n_; ++v) {
            g.adj_[v] = adj_[v];
            g.adj_[v].flip_all();
            g.adj_[v].reset(v);
        }
        return g;
    }

    Bitset vertex_set() const { return Bitset::full(n_); }

    /// Connected components of the subgraph induced by `within`.
    std::vector<Bitset> components(const Bitset& within) const {
        std::vector<Bitset> out;
        Bitset seen(n_);
        for (int s = within.first_set(); s >= 0; s = within.next_set(s)) {
            if (seen.test(s)) continue;
            Bitset comp(n_);
            std::vector<int> stack{s};
            comp.set(s);
            seen.set(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                Bitset nb = adj_[v] & within;
                nb -= comp;
                for (int w : nb) {
                    comp.set(w);
                    seen.set(w);
                    stack.push_back(w);
                }
            }
            out.push_back(std::move(comp));
        }
        return out;
    }

    std::vector<Bitset> components() const { return components(vertex_set()); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    static Graph empty_graph(int n) { return Graph(n); }

    static Graph complete(int n) {
        Graph g(n);
        for (int v = 0; v < n; ++v) {
            g.adj_[v] = Bitset::full(n);
            g.adj_[v].reset(v);
        }
        return g;
    }

    static Graph complete_bipartite(int a, int b) {
        Graph g(a + b);
        for (int u = 0; u < a; ++u)
            for (int v = a; v < a + b; ++v) g.add_edge(u, v);
        return g;
    }

    static Graph cycle(int n) {
        if (n < 3) throw GraphError("cycle needs at least 3 vertices");
        Graph g(n);
        for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
        return g;
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
        Graph g(n);
        for (auto [u, v] : es) g.add_edge(u, v);
        return g;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw GraphError("vertex id out of range");
    }

    int n_ = 0;
    std::vector<Bitset> adj_;
};

/// G(n, p) with edges drawn from a seeded generator; deterministic per seed.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    Graph g(n);
    Rng rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) g.add_edge(u, v);
    return g;
}

} // namespace ramsey
