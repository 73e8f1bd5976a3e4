#pragma once

#include <algorithm>
#include <numeric>
#include <queue>
#include <vector>

#include "ramsey/embedding.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/tree.hpp"

namespace ramsey {

/**
 * Output of the degree-two independent-set construction: D lies in A(T),
 * avoids the excluded set F, consists of degree-2 vertices with no leaf
 * neighbors, and no two members share a common neighbor.
 */
struct DegreeTwoSet {
    Bitset d_set;
    Bitset excluded;
    int size_bound = 0; // ceil((n - 8|L| - 2|F| + 12)/4), clamped at 0
};

inline int degree_two_set_bound(int n, int leaf_count, int f_size) {
    int num = n - 8 * leaf_count - 2 * f_size + 12;
    return num > 0 ? (num + 3) / 4 : 0;
}

inline DegreeTwoSet lemma1_degree_two_set(const Tree& t, const Bitset& f) {
    const int n = t.order();
    // J: A-side degree-2 vertices outside F whose neighbors all have degree 2
    Bitset j_set(n);
    for (int v : t.side_a()) {
        if (t.degree(v) != 2 || f.test(v)) continue;
        bool clean = true;
        for (int w : t.neighbors(v))
            if (t.degree(w) != 2) { clean = false; break; }
        if (clean) j_set.set(v);
    }

    // conflict forest on J: an edge when two members share a neighbor in T
    std::vector<std::vector<int>> conflict(n);
    for (int c = 0; c < n; ++c) {
        int first = -1;
        for (int w : t.neighbors(c)) {
            if (!j_set.test(w)) continue;
            if (first == -1) {
                first = w;
            } else {
                conflict[first].push_back(w);
                conflict[w].push_back(first);
            }
        }
    }

    // per component, keep the larger color class (ties to the class holding
    // the lowest id)
    Bitset d_set(n);
    Bitset visited(n);
    for (int s : j_set) {
        if (visited.test(s)) continue;
        std::vector<int> col0, col1;
        std::queue<std::pair<int, int>> q;
        q.emplace(s, 0);
        visited.set(s);
        while (!q.empty()) {
            auto [v, c] = q.front();
            q.pop();
            (c == 0 ? col0 : col1).push_back(v);
            for (int w : conflict[v])
                if (!visited.test(w)) {
                    visited.set(w);
                    q.emplace(w, c ^ 1);
                }
        }
        bool pick0 = col0.size() != col1.size()
                         ? col0.size() > col1.size()
                         : *std::min_element(col0.begin(), col0.end()) <
                               *std::min_element(col1.begin(), col1.end());
        for (int v : (pick0 ? col0 : col1)) d_set.set(v);
    }

    return {std::move(d_set), f, degree_two_set_bound(n, t.leaf_count(), f.count())};
}

/// Re-checks all five DegreeTwoSet predicates plus the size bound.
inline CheckResult check_degree_two_set(const Tree& t, const DegreeTwoSet& r) {
    auto fail = [](const std::string& s) { return CheckResult{false, s}; };
    if (!r.d_set.is_subset_of(t.side_a())) return fail("D not inside A(T)");
    if (r.d_set.intersects(r.excluded)) return fail("D meets F");
    Bitset neighbor_seen(t.order());
    for (int v : r.d_set) {
        if (t.degree(v) != 2) return fail("D member without degree 2");
        for (int w : t.neighbors(v)) {
            if (t.leaves().test(w)) return fail("D member adjacent to a leaf");
            if (neighbor_seen.test(w)) return fail("two D members share a neighbor");
            neighbor_seen.set(w);
        }
    }
    if (r.d_set.count() < r.size_bound) return fail("size bound violated");
    return {};
}

/// A balanced tree separator: removing `vertex` splits the rest into parts K
/// and H with no crossing edges and (n-1)/3 <= |K|,|H| <= 2(n-1)/3.
struct SeparatorResult {
    int vertex = -1;
    Bitset k_part, h_part;
};

namespace detail {

/// Components of T - v, sorted by (size, lowest id).
inline std::vector<Bitset> tree_components_without(const Tree& t, int v) {
    const int n = t.order();
    Bitset seen(n);
    seen.set(v);
    std::vector<Bitset> comps;
    for (int root : t.neighbors(v)) {
        if (seen.test(root)) continue;
        Bitset comp(n);
        std::vector<int> stack{root};
        seen.set(root);
        comp.set(root);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : t.neighbors(x))
                if (!seen.test(w)) {
                    seen.set(w);
                    comp.set(w);
                    stack.push_back(w);
                }
        }
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(), [](const Bitset& a, const Bitset& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a.first_set() < b.first_set();
    });
    return comps;
}

} // namespace detail

inline SeparatorResult lemma2_separator(const Tree& t) {
    const int n = t.order();
    if (n < 3) throw PreconditionError("separator needs a tree on at least 3 vertices");

    int v = t.leaves().first_set();
    std::vector<Bitset> comps;
    while (true) {
        comps = detail::tree_components_without(t, v);
        const Bitset* big = nullptr;
        for (const auto& c : comps)
            if (2 * c.count() >= n) { big = &c; break; }
        if (!big) break;
        if (2 * big->count() == n) {
            SeparatorResult r;
            r.vertex = v;
            r.k_part = *big;
            r.h_part = Bitset::full(n);
            r.h_part -= *big;
            r.h_part.reset(v);
            return r;
        }
        // walk toward the large component: v's unique neighbor inside it
        int next = -1;
        for (int w : t.neighbors(v))
            if (big->test(w)) { next = w; break; }
        v = next;
    }

    SeparatorResult r;
    r.vertex = v;
    r.k_part = Bitset(n);
    r.h_part = Bitset(n);
    const int d = int(comps.size());
    if (d == 2) {
        r.k_part = comps[0];
        r.h_part = comps[1];
        return r;
    }
    // d >= 3: greedy component packing around the largest prefix within
    // (n-1)/3, then the two terminal cases
    std::vector<int> sizes(d);
    for (int i = 0; i < d; ++i) sizes[i] = comps[i].count();
    int prefix = 0, t_idx = 0;
    while (t_idx < d && 3 * (prefix + sizes[t_idx]) <= n - 1) prefix += sizes[t_idx++];
    // t_idx is now the count of components summing <= (n-1)/3
    if (3 * (prefix + sizes[t_idx]) <= 2 * (n - 1)) {
        for (int i = 0; i <= t_idx; ++i) r.k_part |= comps[i];
        for (int i = t_idx + 1; i < d; ++i) r.h_part |= comps[i];
    } else {
        r.k_part = comps[t_idx];
        for (int i = 0; i < d; ++i)
            if (i != t_idx) r.h_part |= comps[i];
    }
    return r;
}

inline CheckResult check_separator(const Tree& t, const SeparatorResult& r) {
    auto fail = [](const std::string& s) { return CheckResult{false, s}; };
    const int n = t.order();
    if (r.k_part.intersects(r.h_part)) return fail("parts overlap");
    if (r.k_part.test(r.vertex) || r.h_part.test(r.vertex)) return fail("separator inside a part");
    if (r.k_part.count() + r.h_part.count() != n - 1) return fail("parts do not cover T - v");
    for (int ksize : {r.k_part.count(), r.h_part.count()}) {
        if (3 * ksize < n - 1) return fail("part below (n-1)/3");
        if (3 * ksize > 2 * (n - 1)) return fail("part above 2(n-1)/3");
    }
    for (auto [a, b] : t.edges()) {
        if ((r.k_part.test(a) && r.h_part.test(b)) || (r.k_part.test(b) && r.h_part.test(a)))
            return fail("edge crosses the parts");
    }
    return {};
}

/**
 * Folklore greedy embedding: any tree T embeds into a host with minimum
 * degree >= |V(T)| - 1, pinning w1 onto w2. BFS order from w1; each vertex
 * takes the lowest unused host neighbor of its parent's image.
 */
inline Embedding lemma3_greedy_embed(const Tree& t, const Graph& host, int w1, int w2) {
    if (host.min_degree() < t.order() - 1)
        throw PreconditionError("host minimum degree below |V(T)| - 1");
    if (w1 < 0 || w1 >= t.order() || w2 < 0 || w2 >= host.order())
        throw PreconditionError("pin vertex out of range");

    std::vector<int> map(t.order(), -1);
    Bitset used(host.order());
    map[w1] = w2;
    used.set(w2);
    std::queue<int> q;
    q.push(w1);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : t.neighbors(u)) {
            if (map[w] != -1) continue;
            Bitset candidates = host.neighbors(map[u]);
            candidates -= used;
            int pick = candidates.first_set();
            if (pick < 0)
                throw TheoremViolation("lemma-3", "greedy embed starved despite min-degree bound");
            map[w] = pick;
            used.set(pick);
            q.push(w);
        }
    }
    return Embedding{t.to_graph(), host, std::move(map), false};
}

} // namespace ramsey
