#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramsey/bitset.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

struct TreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * A tree on vertices 0..n-1 with caches built eagerly: bipartition (A,B) with
 * |A| >= |B|, the leaf set, and the degree table. Immutable after
 * construction.
 *
 * The bipartition is the 2-coloring rooted at vertex 0; when the color
 * classes tie in size, A is the class containing vertex 0.
 */
class Tree {
public:
    Tree(int order, std::vector<std::pair<int, int>> edge_list)
        : n_(order), edges_(std::move(edge_list)), adj_(order), degree_(order, 0),
          side_a_(order), side_b_(order), leaves_(order) {
        if (order <= 0) throw TreeError("tree order must be positive");
        if (int(edges_.size()) != order - 1) throw TreeError("tree needs exactly n-1 edges");
        for (auto [u, v] : edges_) {
            if (u < 0 || u >= order || v < 0 || v >= order || u == v)
                throw TreeError("bad tree edge");
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            ++degree_[u];
            ++degree_[v];
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());

        // BFS 2-coloring doubles as the connectivity check
        std::vector<int> color(order, -1);
        std::queue<int> q;
        color[0] = 0;
        q.push(0);
        int seen = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj_[v]) {
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    q.push(w);
                    ++seen;
                }
            }
        }
        if (seen != order) throw TreeError("tree is not connected");

        Bitset c0(order), c1(order);
        for (int v = 0; v < order; ++v) (color[v] == 0 ? c0 : c1).set(v);
        if (c0.count() >= c1.count()) {
            side_a_ = std::move(c0);
            side_b_ = std::move(c1);
        } else {
            side_a_ = std::move(c1);
            side_b_ = std::move(c0);
        }
        for (int v = 0; v < order; ++v)
            if (degree_[v] <= 1) leaves_.set(v);
    }

    int order() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return degree_.at(v); }
    int max_degree() const { return *std::max_element(degree_.begin(), degree_.end()); }

    const Bitset& side_a() const { return side_a_; }
    const Bitset& side_b() const { return side_b_; }
    const Bitset& leaves() const { return leaves_; }
    int leaf_count() const { return leaves_.count(); }

    bool has_edge(int u, int v) const {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    /// Number of leaves of the tree adjacent to v.
    int leaf_neighbor_count(int v) const {
        int c = 0;
        for (int w : adj_[v]) c += leaves_.test(w);
        return c;
    }

    Graph to_graph() const { return Graph::from_edges(n_, edges_); }

    static Tree path(int n) {
        std::vector<std::pair<int, int>> es;
        for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
        return Tree(n, std::move(es));
    }

    static Tree star(int n) {
        std::vector<std::pair<int, int>> es;
        for (int v = 1; v < n; ++v) es.emplace_back(0, v);
        return Tree(n, std::move(es));
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> degree_;
    Bitset side_a_, side_b_, leaves_;
};

inline std::pair<Bitset, Bitset> bipartition(const Tree& t) {
    return {t.side_a(), t.side_b()};
}

/// Decodes a Prüfer sequence over 0..n-1 (length n-2) into a tree.
inline Tree prufer_decode(int n, const std::vector<int>& seq) {
    if (n < 1) throw TreeError("prufer: order must be positive");
    if (int(seq.size()) != std::max(0, n - 2)) throw TreeError("prufer: bad sequence length");
    if (n == 1) return Tree(1, {});
    std::vector<int> degree(n, 1);
    for (int x : seq) {
        if (x < 0 || x >= n) throw TreeError("prufer: entry out of range");
        ++degree[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<std::pair<int, int>> edges;
    for (int x : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
    return Tree(n, std::move(edges));
}

/// Inverse of prufer_decode: peel the lowest-id leaf, record its neighbor.
inline std::vector<int> prufer_encode(const Tree& t) {
    int n = t.order();
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = t.degree(v);
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    std::vector<int> seq;
    for (int step = 0; step + 2 < n; ++step) {
        int leaf = leaves.top();
        leaves.pop();
        removed[leaf] = true;
        int parent = -1;
        for (int w : t.neighbors(leaf))
            if (!removed[w]) parent = w;
        seq.push_back(parent);
        if (--degree[parent] == 1) leaves.push(parent);
    }
    return seq;
}

inline Tree random_tree(int n, std::uint64_t seed) {
    if (n <= 2) return n == 2 ? Tree(2, {{0, 1}}) : Tree(1, {});
    Rng rng(seed);
    std::vector<int> seq(n - 2);
    for (auto& x : seq) x = rng.below_int(n);
    return prufer_decode(n, seq);
}

/**
 * Connected graph on n vertices with exactly one cycle (n edges). Carries the
 * cycle vertex list and, when the graph is not itself a cycle, the designated
 * cycle edge (t1,t2) whose removal leaves a tree in which t1 is not a leaf.
 */
class UnicyclicGraph {
public:
    UnicyclicGraph(int order, std::vector<std::pair<int, int>> edge_list,
                   int t1 = -1, int t2 = -1)
        : n_(order), edges_(std::move(edge_list)) {
        if (order < 3) throw TreeError("unicyclic graph needs at least 3 vertices");
        if (int(edges_.size()) != order) throw TreeError("unicyclic graph needs exactly n edges");
        Graph g = Graph::from_edges(order, edges_);
        if (g.edge_count() != order) throw TreeError("unicyclic graph has a repeated edge");
        if (int(g.components().size()) != 1) throw TreeError("unicyclic graph is not connected");

        // iterative leaf-stripping: the 2-core that remains is the cycle
        std::vector<int> degree(order);
        for (int v = 0; v < order; ++v) degree[v] = g.degree(v);
        std::vector<int> stack;
        std::vector<bool> stripped(order, false);
        for (int v = 0; v < order; ++v)
            if (degree[v] == 1) stack.push_back(v);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            stripped[v] = true;
            for (int w : g.neighbors(v))
                if (!stripped[w] && --degree[w] == 1) stack.push_back(w);
        }
        int start = -1;
        for (int v = 0; v < order; ++v)
            if (!stripped[v]) { start = v; break; }
        if (start < 0) throw TreeError("graph is not unicyclic");
        int prev = -1, cur = start;
        do {
            cycle_.push_back(cur);
            int nxt = -1;
            for (int w : g.neighbors(cur))
                if (!stripped[w] && w != prev) { nxt = w; break; }
            prev = cur;
            cur = nxt;
        } while (cur != start && cur != -1);
        if (int(cycle_.size()) < 3) throw TreeError("graph is not unicyclic");

        if (int(cycle_.size()) < order || t1 >= 0) {
            if (t1 >= 0) {
                if (!g.has_edge(t1, t2) || !on_cycle(t1) || !on_cycle(t2))
                    throw TreeError("designated edge is not on the cycle");
                if (g.degree(t1) < 3 && int(cycle_.size()) < order)
                    throw TreeError("designated t1 would become a leaf");
                t1_ = t1;
                t2_ = t2;
            } else {
                // lowest-id cycle vertex of degree >= 3, paired with its
                // lowest-id cycle neighbor
                for (int v : sorted_cycle())
                    if (g.degree(v) >= 3) { t1_ = v; break; }
                if (t1_ < 0) throw TreeError("graph is not unicyclic");
                int best = -1;
                for (int w : g.neighbors(t1_))
                    if (on_cycle(w) && cycle_adjacent(t1_, w) && (best < 0 || w < best)) best = w;
                t2_ = best;
            }
        }
    }

    int order() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& cycle() const { return cycle_; }
    int cycle_length() const { return int(cycle_.size()); }
    bool is_pure_cycle() const { return int(cycle_.size()) == n_; }
    int t1() const { return t1_; }
    int t2() const { return t2_; }

    Graph to_graph() const { return Graph::from_edges(n_, edges_); }

private:
    bool on_cycle(int v) const {
        return std::find(cycle_.begin(), cycle_.end(), v) != cycle_.end();
    }

    bool cycle_adjacent(int u, int v) const {
        int k = int(cycle_.size());
        for (int i = 0; i < k; ++i) {
            int a = cycle_[i], b = cycle_[(i + 1) % k];
            if ((a == u && b == v) || (a == v && b == u)) return true;
        }
        return false;
    }

    std::vector<int> sorted_cycle() const {
        std::vector<int> c = cycle_;
        std::sort(c.begin(), c.end());
        return c;
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> cycle_;
    int t1_ = -1, t2_ = -1;
};

struct NormalizedUnicyclic {
    int t1;
    int t2;
    Tree tree;
};

/**
 * Removes the designated cycle edge and returns (t1, t2, tree). Rejects pure
 * cycles: the caller must route those to the cycle branch of the unicyclic
 * engine.
 */
inline NormalizedUnicyclic unicyclic_normalize(const UnicyclicGraph& u) {
    if (u.is_pure_cycle()) throw TreeError("pure cycle: no designated edge to remove");
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : u.edges()) {
        if ((a == u.t1() && b == u.t2()) || (a == u.t2() && b == u.t1())) continue;
        edges.emplace_back(a, b);
    }
    return {u.t1(), u.t2(), Tree(u.order(), std::move(edges))};
}

/// Random unicyclic graph: a random tree plus one random extra edge.
inline UnicyclicGraph random_unicyclic(int n, std::uint64_t seed) {
    if (n < 3) throw TreeError("unicyclic graph needs at least 3 vertices");
    Rng rng(seed);
    Tree t = random_tree(n, rng.next());
    auto edges = t.edges();
    while (true) {
        int u = rng.below_int(n), v = rng.below_int(n);
        if (u == v || t.has_edge(u, v)) continue;
        edges.emplace_back(u, v);
        return UnicyclicGraph(n, std::move(edges));
    }
}

} // namespace ramsey
