#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/embedding.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/fan.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/lemmas.hpp"
#include "ramsey/tree.hpp"
#include "ramsey/witness_tree.hpp"

namespace ramsey {

namespace detail {

/**
 * Rotation-extension Hamiltonian cycle over the vertices of `active`, valid
 * under the Dirac condition (minimum induced degree >= |active|/2): grow a
 * maximal path, close it through a crossing chord pair, splice in an
 * off-cycle vertex, repeat until spanning.
 */
inline std::vector<int> hamiltonian_cycle_masked(const Graph& g, const Bitset& active) {
    const int total = active.count();
    std::vector<int> path{active.first_set()};
    Bitset on_path(g.order());
    on_path.set(path[0]);

    auto grow = [&]() {
        for (bool grew = true; grew;) {
            grew = false;
            Bitset cand = g.neighbors(path.back()) & active;
            cand -= on_path;
            if (int v = cand.first_set(); v >= 0) {
                path.push_back(v);
                on_path.set(v);
                grew = true;
                continue;
            }
            cand = g.neighbors(path.front()) & active;
            cand -= on_path;
            if (int v = cand.first_set(); v >= 0) {
                path.insert(path.begin(), v);
                on_path.set(v);
                grew = true;
            }
        }
    };

    while (true) {
        grow();
        const int len = int(path.size());
        std::vector<int> cyc;
        if (g.has_edge(path.front(), path.back())) {
            cyc = path;
        } else {
            // crossing chord pair: path[i] ~ back and path[i+1] ~ front
            int split = -1;
            for (int i = 0; i + 2 < len; ++i)
                if (g.has_edge(path[i], path.back()) && g.has_edge(path[i + 1], path.front())) {
                    split = i;
                    break;
                }
            if (split < 0)
                throw TheoremViolation("dirac", "no crossing chord pair on a maximal path");
            cyc.assign(path.begin(), path.begin() + split + 1);
            for (int i = len - 1; i > split; --i) cyc.push_back(path[i]);
        }
        if (len == total) return cyc;

        // splice an off-cycle vertex adjacent to the cycle
        Bitset off = active;
        off -= on_path;
        int w = -1, at = -1;
        for (int v : off) {
            Bitset nb = g.neighbors(v) & on_path;
            if (int u = nb.first_set(); u >= 0) {
                w = v;
                at = u;
                break;
            }
        }
        if (w < 0)
            throw TheoremViolation("dirac", "graph disconnected despite the degree bound");
        int pos = int(std::find(cyc.begin(), cyc.end(), at) - cyc.begin());
        std::vector<int> next{w};
        for (int i = 0; i < len; ++i) next.push_back(cyc[(pos + i) % len]);
        path = std::move(next);
        on_path.set(w);
    }
}

} // namespace detail

/// Hamiltonian cycle under Dirac's condition, delta(h) >= |V(h)|/2.
inline std::vector<int> dirac_hamiltonian(const Graph& h) {
    if (h.order() < 3) throw PreconditionError("hamiltonian cycle needs at least 3 vertices");
    if (2 * h.min_degree() < h.order())
        throw PreconditionError("dirac condition violated: min degree below |V|/2");
    return detail::hamiltonian_cycle_masked(h, h.vertex_set());
}

struct CyclePlan {
    enum class Method { DiracChord, CliqueInU, Searched };
    Method method;
    std::vector<int> cycle; // k host vertices forming a cycle in gbar
};

inline constexpr long long kDefaultSearchBudget = 10'000'000;

namespace detail {

enum class LongCycleOutcome { Found, Exhausted, Absent };

/**
 * Budgeted search for a cycle on exactly k vertices in `gbar`:
 * rotation-extension with a sliding chord-window check, then an exhaustive
 * DFS fallback while budget remains.
 */
inline LongCycleOutcome long_cycle_search(const Graph& gbar, int k, long long budget,
                                          std::vector<int>& out) {
    const int n = gbar.order();
    if (k < 3 || k > n) return LongCycleOutcome::Absent;

    auto window_check = [&](const std::vector<int>& path) -> bool {
        for (int i = 0; i + k <= int(path.size()); ++i)
            if (gbar.has_edge(path[i], path[i + k - 1])) {
                out.assign(path.begin() + i, path.begin() + i + k);
                return true;
            }
        return false;
    };

    for (int start = 0; start < n && budget > 0; ++start) {
        std::vector<int> path{start};
        Bitset on_path(n);
        on_path.set(start);
        long long idle = 0;
        std::size_t rot = 0;
        while (budget > 0 && idle <= 2 * n) {
            budget -= int(path.size());
            if (window_check(path)) return LongCycleOutcome::Found;
            Bitset cand = gbar.neighbors(path.back());
            cand -= on_path;
            if (int v = cand.first_set(); v >= 0) {
                path.push_back(v);
                on_path.set(v);
                idle = 0;
                continue;
            }
            // Posa rotation at the stuck endpoint
            std::vector<int> pivots;
            for (int i = 0; i + 2 < int(path.size()); ++i)
                if (gbar.has_edge(path[i], path.back())) pivots.push_back(i);
            if (pivots.empty()) break;
            int pivot = pivots[rot++ % pivots.size()];
            std::reverse(path.begin() + pivot + 1, path.end());
            ++idle;
        }
    }
    if (budget <= 0) return LongCycleOutcome::Exhausted;

    // exhaustive DFS fallback, still budgeted; cycles are rooted at their
    // minimum vertex
    std::vector<int> path;
    Bitset on_path(n);
    bool exhausted = false;
    auto dfs = [&](auto&& self, int v) -> bool {
        if (budget-- <= 0) {
            exhausted = true;
            return false;
        }
        path.push_back(v);
        on_path.set(v);
        if (int(path.size()) == k) {
            if (gbar.has_edge(v, path[0])) {
                out = path;
                return true;
            }
        } else {
            Bitset cand = gbar.neighbors(v);
            cand -= on_path;
            for (int w : cand) {
                if (w < path[0]) continue;
                if (self(self, w)) return true;
                if (exhausted) break;
            }
        }
        path.pop_back();
        on_path.reset(v);
        return false;
    };
    for (int start = 0; start < n; ++start) {
        if (dfs(dfs, start)) return LongCycleOutcome::Found;
        if (exhausted) return LongCycleOutcome::Exhausted;
    }
    return LongCycleOutcome::Absent;
}

} // namespace detail

/**
 * Produces a k-cycle in the complement under the no-fan certificate. With
 * max degree <= n-2 the complement minus a vertex satisfies Dirac's
 * condition, so the cycle comes from a Hamiltonian cycle plus a chord pair
 * through the removed vertex; a degree-(n-1) vertex instead leaves an
 * independent neighborhood remainder that is a clique in the complement.
 * The residual case runs the budgeted search.
 */
inline CyclePlan cycle_witness(const Graph& gbar, const Graph& g, int k, int m, int n,
                               long long budget = kDefaultSearchBudget) {
    const int order = g.order();
    if (k < 3 || k > order) throw PreconditionError("cycle length out of range");
    const int max_deg = g.max_degree();

    if (max_deg <= n - 2) {
        const int v = 0;
        Bitset rest = g.vertex_set();
        rest.reset(v);
        std::vector<int> ham = detail::hamiltonian_cycle_masked(gbar, rest);
        const int len = int(ham.size());
        for (int i = 0; i < len; ++i) {
            if (!gbar.has_edge(v, ham[i])) continue;
            if (!gbar.has_edge(v, ham[(i + k - 2) % len])) continue;
            std::vector<int> cyc{v};
            for (int j = 0; j < k - 1; ++j) cyc.push_back(ham[(i + j) % len]);
            return {CyclePlan::Method::DiracChord, std::move(cyc)};
        }
        throw TheoremViolation("claim-4.1", "no chord pair despite n complement-neighbors");
    }

    if (max_deg == n - 1) {
        int u = 0;
        while (g.degree(u) != n - 1) ++u;
        NeighborhoodStructure ns = neighborhood_structure(g, u, g.vertex_set(), m);
        if (ns.u_set.count() >= k) {
            std::vector<int> cyc;
            for (int v : ns.u_set) {
                cyc.push_back(v);
                if (int(cyc.size()) == k) break;
            }
            return {CyclePlan::Method::CliqueInU, std::move(cyc)};
        }
    }

    std::vector<int> cyc;
    switch (detail::long_cycle_search(gbar, k, budget, cyc)) {
    case detail::LongCycleOutcome::Found:
        return {CyclePlan::Method::Searched, std::move(cyc)};
    case detail::LongCycleOutcome::Exhausted:
        throw SearchBudgetExhausted("k-cycle search budget exhausted (k = " +
                                    std::to_string(k) + ")");
    default:
        throw TheoremViolation("claim-4.1",
                               "exhaustive search found no k-cycle the theorems guarantee");
    }
}

/// (x, y, z) with x,z in K, y in H, and y adjacent to both in gbar; found by
/// scanning H for a vertex with two complement-neighbors in K.
struct Claim42Triple {
    int x, y, z;
};

inline Claim42Triple claim42_triple(const Graph& gbar, const Bitset& k_set, const Bitset& h_set) {
    for (int y : h_set) {
        Bitset partners = gbar.neighbors(y) & k_set;
        int x = partners.first_set();
        if (x < 0) continue;
        int z = partners.next_set(x);
        if (z >= 0) return {x, y, z};
    }
    throw TheoremViolation("claim-4.2", "no doubly-connected vertex despite the edge count");
}

/**
 * The separator specialization that respects the designated edge: T - x
 * splits into H and J with 2m-2 <= |H|,|J| <= n-2m+1 and d_H(x) <= 2m-2,
 * and one of: x is a designated vertex, x is adjacent to neither, or t1 and
 * t2 lie together in one part.
 */
struct UCSplit {
    int splitter = -1;
    Bitset h_part, j_part;
    bool cond_designated = false;   // (1) x in {t1, t2}
    bool cond_nonadjacent = false;  // (2) x adjacent to neither
    bool cond_both_in_h = false;    // (3)
    bool cond_both_in_j = false;    // (4)
};

inline CheckResult check_uc_split(const Tree& t, int t1, int t2, int m, const UCSplit& s) {
    auto fail = [](const std::string& msg) { return CheckResult{false, msg}; };
    const int n = t.order();
    if (s.h_part.intersects(s.j_part)) return fail("parts overlap");
    if (s.h_part.count() + s.j_part.count() != n - 1) return fail("parts do not cover T - x");
    if (s.h_part.test(s.splitter) || s.j_part.test(s.splitter))
        return fail("splitter inside a part");
    for (auto [a, b] : t.edges())
        if ((s.h_part.test(a) && s.j_part.test(b)) || (s.h_part.test(b) && s.j_part.test(a)))
            return fail("edge crosses the parts");
    for (int size : {s.h_part.count(), s.j_part.count()}) {
        if (size < 2 * m - 2) return fail("part below 2m-2");
        if (size > n - 2 * m + 1) return fail("part above n-2m+1");
    }
    int dh = 0;
    for (int v : t.neighbors(s.splitter)) dh += s.h_part.test(v);
    if (dh > 2 * m - 2) return fail("d_H(x) above 2m-2");
    bool c1 = s.splitter == t1 || s.splitter == t2;
    bool c2 = !t.has_edge(s.splitter, t1) && !t.has_edge(s.splitter, t2);
    bool c3 = s.h_part.test(t1) && s.h_part.test(t2);
    bool c4 = s.j_part.test(t1) && s.j_part.test(t2);
    if (!(c1 || c2 || c3 || c4)) return fail("no designated-edge condition holds");
    if (c1 != s.cond_designated || c2 != s.cond_nonadjacent || c3 != s.cond_both_in_h ||
        c4 != s.cond_both_in_j)
        return fail("condition flags are stale");
    return {};
}

namespace detail {

inline UCSplit finish_uc_split(const Tree& t, int t1, int t2, int m, int splitter, Bitset h) {
    UCSplit s;
    s.splitter = splitter;
    s.h_part = std::move(h);
    s.j_part = Bitset::full(t.order());
    s.j_part -= s.h_part;
    s.j_part.reset(splitter);
    s.cond_designated = splitter == t1 || splitter == t2;
    s.cond_nonadjacent = !t.has_edge(splitter, t1) && !t.has_edge(splitter, t2);
    s.cond_both_in_h = s.h_part.test(t1) && s.h_part.test(t2);
    s.cond_both_in_j = s.j_part.test(t1) && s.j_part.test(t2);
    if (auto chk = check_uc_split(t, t1, t2, m, s); !chk)
        throw TheoremViolation("claim-4.5", chk.violation);
    return s;
}

/// Ascending pack of components until the union reaches `need` vertices.
inline Bitset pack_components(const std::vector<Bitset>& comps, int capacity_bits, int need,
                              const char* claim) {
    Bitset h(capacity_bits);
    for (const Bitset& c : comps) {
        if (h.count() >= need) break;
        h |= c;
    }
    if (h.count() < need) throw TheoremViolation(claim, "components too small to pack");
    return h;
}

} // namespace detail

inline UCSplit claim45_split(const Tree& t, int t1, int t2, int m) {
    const int n = t.order();
    SeparatorResult sep = lemma2_separator(t);
    std::vector<Bitset> comps = detail::tree_components_without(t, sep.vertex);

    // first candidate: ascending prefix of the K side packed to 2m-2
    {
        std::vector<Bitset> p_side;
        for (const Bitset& c : comps)
            if (c.is_subset_of(sep.k_part)) p_side.push_back(c);
        Bitset h = detail::pack_components(p_side, n, 2 * m - 2, "claim-4.5");
        bool c1 = sep.vertex == t1 || sep.vertex == t2;
        bool c2 = !t.has_edge(sep.vertex, t1) && !t.has_edge(sep.vertex, t2);
        bool c3 = h.test(t1) && h.test(t2);
        bool c4 = !h.test(t1) && !h.test(t2) && !c1;
        if (c1 || c2 || c3 || c4)
            return detail::finish_uc_split(t, t1, t2, m, sep.vertex, std::move(h));
    }

    // the designated vertices straddle any component split and the separator
    // touches at least one of them
    const Bitset* ca = nullptr;
    const Bitset* cb = nullptr;
    for (const Bitset& c : comps) {
        if (c.test(t1)) ca = &c;
        if (c.test(t2)) cb = &c;
    }
    if (!ca || !cb || ca == cb)
        throw TheoremViolation("claim-4.5", "designated vertices not in distinct components");

    const int united = ca->count() + cb->count();
    if (united <= n - 2 * m + 1) {
        Bitset h = *ca | *cb;
        for (const Bitset& c : comps) {
            if (h.count() >= 2 * m - 2) break;
            if (&c == ca || &c == cb) continue;
            h |= c;
        }
        return detail::finish_uc_split(t, t1, t2, m, sep.vertex, std::move(h));
    }

    // |ca ∪ cb| >= n-2m+2: re-root at a designated vertex or its surrogate;
    // the t1 surgery is preferred when both designated vertices qualify
    int ta, tb;
    const Bitset *comp_a, *comp_b;
    if (t.has_edge(sep.vertex, t1)) {
        ta = t1;
        tb = t2;
        comp_a = ca;
        comp_b = cb;
    } else if (t.has_edge(sep.vertex, t2)) {
        ta = t2;
        tb = t1;
        comp_a = cb;
        comp_b = ca;
    } else {
        throw TheoremViolation("claim-4.5", "separator adjacent to neither designated vertex");
    }

    auto rerooted = [&](int pivot, const Bitset& inside) -> UCSplit {
        std::vector<Bitset> sub;
        for (const Bitset& c : detail::tree_components_without(t, pivot))
            if (c.is_subset_of(inside)) sub.push_back(c);
        Bitset h = detail::pack_components(sub, n, 2 * m - 2, "claim-4.5");
        return detail::finish_uc_split(t, t1, t2, m, pivot, std::move(h));
    };

    if (2 * comp_a->count() >= n - 2 * m + 2) {
        Bitset inside = *comp_a;
        inside.reset(ta);
        return rerooted(ta, inside);
    }

    // the far component is the large one; y is the separator's gateway into it
    int y = -1;
    for (int v : t.neighbors(sep.vertex))
        if (comp_b->test(v)) { y = v; break; }
    if (y == tb) {
        Bitset inside = *comp_b;
        inside.reset(tb);
        return rerooted(tb, inside);
    }
    std::vector<Bitset> y_comps = detail::tree_components_without(t, y);
    const Bitset* k_comp = nullptr;
    for (const Bitset& c : y_comps)
        if (c.test(tb)) k_comp = &c;
    if (!k_comp) throw TheoremViolation("claim-4.5", "lost the far designated vertex");

    if (k_comp->count() <= comp_b->count() - 2 * m + 1) {
        Bitset m_comp = Bitset::full(n);
        m_comp -= *comp_b;
        Bitset h = m_comp | *k_comp;
        return detail::finish_uc_split(t, t1, t2, m, y, std::move(h));
    }
    if (!t.has_edge(y, tb)) {
        Bitset inside = *comp_b;
        inside.reset(y);
        return rerooted(y, inside);
    }
    Bitset inside = *k_comp;
    inside.reset(tb);
    return rerooted(tb, inside);
}

namespace detail {

inline Witness finish_uc_witness(const Graph& g, const UnicyclicGraph& uc, std::vector<int> map,
                                 int m, int pt1, int pt2) {
    Witness w;
    w.kind = WitnessKind::UnicyclicInComplement;
    w.m = m;
    w.n = uc.order();
    w.t1_image = map[pt1];
    w.t2_image = map[pt2];
    w.embedding = Embedding{uc.to_graph(), g, std::move(map), true};
    CheckResult ok = check_embedding(w.embedding);
    if (!ok) throw TheoremViolation("verifier", ok.violation);
    return w;
}

/// Claim 4.3's fallback: when no second anchor exists, every X1 ∪ Y1 vertex
/// has m-1 complement-neighbors in O1 and the pattern embeds with the
/// designated vertices pinned inside X1.
inline Witness claim43_witness(const Graph& g, const Graph& gbar, const UnicyclicGraph& uc,
                               const Tree& t, int t1, int t2, int m, const AnchorSets& first,
                               const Bitset& o1) {
    const int n = t.order();
    for (int u : first.x1 | first.y1)
        if (o1.count() - g.degree_in(u, o1) < m - 1)
            throw TheoremViolation("claim-4.3", "complement O1-degree below m-1");

    std::vector<int> lset;
    for (int leaf : t.leaves())
        if (leaf != t2) lset.push_back(leaf);

    if (t.leaf_count() >= m) {
        lset.resize(m - 1);
        Bitset removed(n);
        for (int v : lset) removed.set(v);
        int p1 = first.x1.first_set();
        int p2 = first.x1.next_set(p1);
        std::vector<int> map =
            embed_forest_pinned(t, removed, {{t1, p1}, {t2, p2}}, first.x1, first.y1, m);
        Bitset used(g.order());
        for (int v = 0; v < n; ++v)
            if (map[v] >= 0) used.set(map[v]);
        for (int leaf : lset) {
            int parent = t.neighbors(leaf)[0];
            Bitset pool = gbar.neighbors(map[parent]) & o1;
            int host = take_free(pool, used, "claim-4.3");
            map[leaf] = host;
            used.set(host);
        }
        return finish_uc_witness(g, uc, std::move(map), m, t1, t2);
    }

    // leaf-poor route: degree-two vertices bridge X1 and O1 via triples
    Bitset f(n);
    f.set(t1);
    f.set(t2);
    DegreeTwoSet dts = lemma1_degree_two_set(t, f);
    const int k_d = m - 1 - int(lset.size());
    std::vector<int> d_verts;
    for (int v : dts.d_set) {
        if (int(d_verts.size()) == k_d) break;
        d_verts.push_back(v);
    }
    if (int(d_verts.size()) < k_d)
        throw TheoremViolation("claim-4.3", "leaf and degree-two supply below m-1");

    std::vector<int> map(n, -1);
    Bitset used(g.order());
    Bitset pattern_used(n);
    for (int d : d_verts) {
        Bitset k_free = first.x1;
        k_free -= used;
        Bitset h_free = o1;
        h_free -= used;
        if (h_free.count() < n + 1 || 2 * k_free.count() < h_free.count() + 1)
            throw TheoremViolation("claim-4.2", "triple counting hypothesis failed");
        Claim42Triple tr = claim42_triple(gbar, k_free, h_free);
        int x_nb = t.neighbors(d)[0], y_nb = t.neighbors(d)[1];
        map[d] = tr.y;
        map[x_nb] = tr.x;
        map[y_nb] = tr.z;
        used.set(tr.x);
        used.set(tr.y);
        used.set(tr.z);
        pattern_used.set(d);
        pattern_used.set(x_nb);
        pattern_used.set(y_nb);
    }

    // Y1 absorbs spare A-side vertices, never the designated pair or a leaf
    std::vector<int> y_pool;
    for (int v : t.side_a()) {
        if (pattern_used.test(v) || v == t1 || v == t2 || t.leaves().test(v)) continue;
        y_pool.push_back(v);
    }
    if (int(y_pool.size()) < first.y1.count())
        throw TheoremViolation("claim-4.3", "A-side pool cannot fill Y1");
    y_pool.resize(first.y1.count());
    fill_ascending(y_pool, first.y1, used, map, "claim-4.3");

    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (map[v] == -1 && !(t.leaves().test(v) && v != t2)) rest.push_back(v);
    fill_ascending(rest, first.x1, used, map, "claim-4.3");

    for (int leaf : lset) {
        int parent = t.neighbors(leaf)[0];
        Bitset pool = gbar.neighbors(map[parent]) & o1;
        int host = take_free(pool, used, "claim-4.3");
        map[leaf] = host;
        used.set(host);
    }
    return finish_uc_witness(g, uc, std::move(map), m, t1, t2);
}

/// Claim 4.4: a vertex with >= 2m-1 leaf neighbors embeds through a star
/// center, either inside one U side or across both from a W vertex.
inline Witness claim44_witness(const ProofContext& ctx, const UnicyclicGraph& uc, int heavy) {
    const Graph& g = ctx.host();
    const Graph& gbar = ctx.cohost();
    const Tree& t = ctx.pattern();
    const int n = ctx.n, m = ctx.m;
    const int t1 = ctx.t1, t2 = ctx.t2;

    int star = -1;
    for (int w = 0; w < gbar.order(); ++w)
        if (gbar.degree(w) >= n - 1) { star = w; break; }
    if (star < 0) throw TheoremViolation("claim-4.4", "no star center in the complement");

    auto inside_u_route = [&](const Bitset& u_side) -> Witness {
        std::vector<int> map(n, -1);
        Bitset used(g.order());
        map[heavy] = star;
        used.set(star);
        const int spill = n - u_side.count();
        std::vector<int> out_leaves;
        for (int w : t.neighbors(heavy)) {
            if (int(out_leaves.size()) == spill) break;
            if (t.leaves().test(w) && w != t2) out_leaves.push_back(w);
        }
        if (int(out_leaves.size()) < spill)
            throw TheoremViolation("claim-4.4", "not enough spare leaves to spill");
        Bitset outside = gbar.neighbors(star);
        outside -= u_side;
        fill_ascending(out_leaves, outside, used, map, "claim-4.4");
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (map[v] == -1) rest.push_back(v);
        fill_ascending(rest, u_side, used, map, "claim-4.4");
        return finish_uc_witness(g, uc, std::move(map), m, t1, t2);
    };

    if (ctx.first.u1.test(star)) return inside_u_route(ctx.first.u1);
    if (ctx.second.u1.test(star)) return inside_u_route(ctx.second.u1);

    // star center in W: split the kept components across both U sides
    const Bitset& u1 = ctx.first.u1;
    const Bitset& u2 = ctx.second.u1;
    const int co1 = u1.count() - g.degree_in(star, u1);
    const int co2 = u2.count() - g.degree_in(star, u2);
    const bool first_side = co1 >= 4;
    if (!first_side && co2 < 4)
        throw TheoremViolation("claim-4.4", "star center lacks 4 complement-neighbors on a side");
    const Bitset& near = first_side ? u1 : u2;
    const Bitset& far = first_side ? u2 : u1;

    // keep components of size >= 2 or holding t2; pull the ones holding the
    // designated vertices to the front so they land on the near side
    std::vector<Bitset> raw = tree_components_without(t, heavy);
    std::stable_partition(raw.begin(), raw.end(),
                          [&](const Bitset& c) { return c.test(t1) || c.test(t2); });
    std::vector<Bitset> comps;
    for (const Bitset& c : raw)
        if (c.count() >= 2 || c.test(t2)) comps.push_back(c);

    std::vector<int> map(n, -1);
    Bitset used(g.order());
    map[heavy] = star;
    used.set(star);
    const int near_share = std::min((first_side ? co1 : co2) - 2, int(comps.size()));

    Bitset near_co = gbar.neighbors(star) & near;
    Bitset far_co = gbar.neighbors(star) & far;
    for (int i = 0; i < int(comps.size()); ++i) {
        int rep = -1;
        for (int v : t.neighbors(heavy))
            if (comps[i].test(v)) { rep = v; break; }
        int host = take_free(i < near_share ? near_co : far_co, used, "claim-4.4");
        map[rep] = host;
        used.set(host);
    }
    for (int tv : {t1, t2}) {
        if (tv == heavy || map[tv] != -1) continue;
        int host = take_free(near_co, used, "claim-4.4");
        map[tv] = host;
        used.set(host);
    }
    for (int i = 0; i < int(comps.size()); ++i) {
        std::vector<int> rest;
        for (int v : comps[i])
            if (map[v] == -1) rest.push_back(v);
        fill_ascending(rest, i < near_share ? near : far, used, map, "claim-4.4");
    }
    std::vector<int> spare; // heavy's leaf children outside the kept components
    for (int v = 0; v < n; ++v)
        if (map[v] == -1) spare.push_back(v);
    fill_ascending(spare, gbar.neighbors(star), used, map, "claim-4.4");
    return finish_uc_witness(g, uc, std::move(map), m, t1, t2);
}

/**
 * Crossing complement edges between the U sides: none, all through a single
 * apex, or two disjoint ones. Pairs are stored (u1-end, u2-end).
 */
struct CrossingStructure {
    int matching = 0; // 0, 1 or 2
    std::pair<int, int> e1{-1, -1}, e2{-1, -1};
    int apex = -1; // when matching == 1
    bool apex_in_u1 = false;
};

inline CrossingStructure crossing_structure(const Graph& gbar, const Bitset& u1,
                                            const Bitset& u2) {
    CrossingStructure cs;
    for (int a : u1) {
        Bitset nb = gbar.neighbors(a) & u2;
        if (int b = nb.first_set(); b >= 0) {
            cs.e1 = {a, b};
            break;
        }
    }
    if (cs.e1.first < 0) return cs;
    cs.matching = 1;
    // an edge avoiding both endpoints of e1 settles it immediately
    for (int a : u1) {
        if (a == cs.e1.first) continue;
        Bitset nb = gbar.neighbors(a) & u2;
        nb.reset(cs.e1.second);
        if (int b = nb.first_set(); b >= 0) {
            cs.matching = 2;
            cs.e2 = {a, b};
            return cs;
        }
    }
    // every other edge touches e1; a pair through each endpoint still forms
    // a 2-matching
    std::pair<int, int> through_b{-1, -1}, through_a{-1, -1};
    for (int a : u1) {
        if (a == cs.e1.first) continue;
        Bitset nb = gbar.neighbors(a) & u2;
        if (nb.test(cs.e1.second)) {
            through_b = {a, cs.e1.second};
            break;
        }
    }
    {
        Bitset nb = gbar.neighbors(cs.e1.first) & u2;
        nb.reset(cs.e1.second);
        if (int b = nb.first_set(); b >= 0) through_a = {cs.e1.first, b};
    }
    if (through_b.first >= 0 && through_a.first >= 0) {
        cs.matching = 2;
        cs.e1 = through_b;
        cs.e2 = through_a;
        return cs;
    }
    if (through_b.first >= 0) {
        cs.apex = cs.e1.second;
        cs.apex_in_u1 = false;
    } else {
        cs.apex = cs.e1.first;
        cs.apex_in_u1 = true;
    }
    return cs;
}

/// Claim 4.6 violation: w in one U side sees >= 2m-1 complement-neighbors
/// across; the designated split fills both sides through w with t1 and t2
/// kept complement-adjacent. Crossing pairs arrive oriented (own, other).
inline Witness claim46_violation_witness(const ProofContext& ctx, const UnicyclicGraph& uc,
                                         int w, bool w_in_first,
                                         std::pair<int, int> cross1, std::pair<int, int> cross2) {
    const Graph& g = ctx.host();
    const Graph& gbar = ctx.cohost();
    const Tree& t = ctx.pattern();
    const int t1 = ctx.t1, t2 = ctx.t2;
    const Bitset& own = w_in_first ? ctx.first.u1 : ctx.second.u1;
    const Bitset& other = w_in_first ? ctx.second.u1 : ctx.first.u1;

    UCSplit split = claim45_split(t, t1, t2, ctx.m);
    const int x = split.splitter;

    std::vector<int> map(t.order(), -1);
    Bitset used(g.order());
    map[x] = w;
    used.set(w);

    std::vector<int> to_other_co;
    if (split.cond_designated) {
        int t_other = (x == t1) ? t2 : t1;
        if (split.h_part.test(t_other)) to_other_co.push_back(t_other);
    } else if (!split.cond_both_in_h && !split.cond_both_in_j) {
        // one designated vertex per part: route the pair through a crossing
        // edge disjoint from w
        auto edge = (cross1.first == w || cross1.second == w) ? cross2 : cross1;
        int t_h = split.h_part.test(t1) ? t1 : t2;
        int t_j = split.j_part.test(t1) ? t1 : t2;
        map[t_h] = edge.second; // other side hosts the H part
        used.set(edge.second);
        map[t_j] = edge.first;
        used.set(edge.first);
    }
    for (int v : t.neighbors(x))
        if (split.h_part.test(v) && map[v] == -1) to_other_co.push_back(v);
    std::sort(to_other_co.begin(), to_other_co.end());
    to_other_co.erase(std::unique(to_other_co.begin(), to_other_co.end()), to_other_co.end());

    Bitset w_co = gbar.neighbors(w) & other;
    fill_ascending(to_other_co, w_co, used, map, "claim-4.6");
    std::vector<int> h_rest, j_rest;
    for (int v : split.h_part)
        if (map[v] == -1) h_rest.push_back(v);
    for (int v : split.j_part)
        if (map[v] == -1) j_rest.push_back(v);
    fill_ascending(h_rest, other, used, map, "claim-4.6");
    fill_ascending(j_rest, own, used, map, "claim-4.6");
    return finish_uc_witness(g, uc, std::move(map), ctx.m, t1, t2);
}

/// Claim 4.7 violation: a W vertex sees >= 1+5n/18 complement-neighbors on
/// both sides; H fills U1 and J fills U2 through w, rebalancing J when the
/// splitter fans too widely into it. `cross` is oriented (u1-end, u2-end).
inline Witness claim47_violation_witness(const ProofContext& ctx, const UnicyclicGraph& uc,
                                         int w, std::pair<int, int> cross) {
    const Graph& g = ctx.host();
    const Graph& gbar = ctx.cohost();
    const Tree& t = ctx.pattern();
    const int t1 = ctx.t1, t2 = ctx.t2;
    const Bitset& u1 = ctx.first.u1;
    const Bitset& u2 = ctx.second.u1;
    const int co1 = u1.count() - g.degree_in(w, u1);
    const int co2 = u2.count() - g.degree_in(w, u2);

    UCSplit split = claim45_split(t, t1, t2, ctx.m);
    const int x = split.splitter;
    Bitset part_h = split.h_part, part_j = split.j_part;

    auto xdeg = [&](const Bitset& part) {
        int d = 0;
        for (int v : t.neighbors(x)) d += part.test(v);
        return d;
    };
    if (xdeg(part_j) > co2 - 1) {
        int excess = xdeg(part_j) - (co2 - 1);
        for (const Bitset& c : tree_components_without(t, x)) {
            if (excess == 0) break;
            if (!c.is_subset_of(part_j) || c.test(t1) || c.test(t2)) continue;
            part_j -= c;
            part_h |= c;
            --excess;
        }
        if (excess > 0)
            throw TheoremViolation("claim-4.7",
                                   "cannot rebalance J away from the designated pair");
    }
    if (xdeg(part_h) > co1 - 1 || xdeg(part_j) > co2 - 1)
        throw TheoremViolation("claim-4.7", "split still overloads a side after rebalance");

    std::vector<int> map(t.order(), -1);
    Bitset used(g.order());
    map[x] = w;
    used.set(w);
    Bitset w_co1 = gbar.neighbors(w) & u1;
    Bitset w_co2 = gbar.neighbors(w) & u2;

    if (split.cond_designated) {
        int t_other = (x == t1) ? t2 : t1;
        Bitset& pool = part_h.test(t_other) ? w_co1 : w_co2;
        Bitset avail = pool;
        avail -= used;
        int host = avail.first_set();
        if (host < 0) throw TheoremViolation("claim-4.7", "no slot beside w for the pair");
        map[t_other] = host;
        used.set(host);
    } else if (!split.cond_both_in_h && !split.cond_both_in_j) {
        int t_h = part_h.test(t1) ? t1 : t2;
        int t_j = part_j.test(t1) ? t1 : t2;
        map[t_h] = cross.first; // H fills U1
        used.set(cross.first);
        map[t_j] = cross.second;
        used.set(cross.second);
    }

    std::vector<int> h_reps, j_reps, h_rest, j_rest;
    for (int v : t.neighbors(x)) {
        if (map[v] != -1) continue;
        (part_h.test(v) ? h_reps : j_reps).push_back(v);
    }
    fill_ascending(h_reps, w_co1, used, map, "claim-4.7");
    fill_ascending(j_reps, w_co2, used, map, "claim-4.7");
    for (int v : part_h)
        if (map[v] == -1) h_rest.push_back(v);
    for (int v : part_j)
        if (map[v] == -1) j_rest.push_back(v);
    fill_ascending(h_rest, u1, used, map, "claim-4.7");
    fill_ascending(j_rest, u2, used, map, "claim-4.7");
    return finish_uc_witness(g, uc, std::move(map), ctx.m, t1, t2);
}

/// Fan at w from m kept neighbors on each side of a nearly complete
/// bipartite pair.
inline Witness crossing_fan_witness(const ProofContext& ctx, int w, const Bitset& near_side,
                                    const Bitset& far_side, const char* claim) {
    const Graph& g = ctx.host();
    Bitset xs = g.neighbors(w) & far_side;
    Bitset pool = g.neighbors(w) & near_side;
    FanInHost fan;
    fan.center = w;
    Bitset used(g.order());
    int count = 0;
    for (int x : xs) {
        if (count == ctx.m) break;
        Bitset mates = g.neighbors(x) & pool;
        mates -= used;
        int mate = mates.first_set();
        if (mate < 0) throw TheoremViolation(claim, "greedy matching starved");
        used.set(x);
        used.set(mate);
        fan.spokes.emplace_back(x, mate);
        ++count;
    }
    if (count < ctx.m) throw TheoremViolation(claim, "fewer than m crossing neighbors");
    return finish_fan_witness(g, ctx.m, ctx.n, fan);
}

} // namespace detail

/**
 * Claims 4.6-4.8: depending on whether a crossing 2-matching, a single
 * crossing apex, or no crossing edge exists in the complement between U1 and
 * U2, either a violating vertex yields a witness or U1', U2' are fixed and
 * Z1 is assigned against the trimmed sets.
 */
inline std::optional<Witness> enforce_bipartite_structure_uc(ProofContext& ctx,
                                                             const UnicyclicGraph& uc) {
    const Graph& g = ctx.host();
    const Graph& gbar = ctx.cohost();
    const int m = ctx.m, n = ctx.n;
    const Bitset& u1 = ctx.first.u1;
    const Bitset& u2 = ctx.second.u1;

    detail::CrossingStructure cs = detail::crossing_structure(gbar, u1, u2);
    ctx.u1_trim = u1;
    ctx.u2_trim = u2;

    if (cs.matching == 2) {
        for (int w : u1)
            if (u2.count() - g.degree_in(w, u2) >= 2 * m - 1)
                return detail::claim46_violation_witness(ctx, uc, w, true, cs.e1, cs.e2);
        for (int w : u2)
            if (u1.count() - g.degree_in(w, u1) >= 2 * m - 1)
                return detail::claim46_violation_witness(ctx, uc, w, false,
                                                         {cs.e1.second, cs.e1.first},
                                                         {cs.e2.second, cs.e2.first});
    }
    if (cs.matching >= 1) {
        for (int w : ctx.w_set) {
            int co1 = u1.count() - g.degree_in(w, u1);
            int co2 = u2.count() - g.degree_in(w, u2);
            if (18 * co1 >= 18 + 5 * n && 18 * co2 >= 18 + 5 * n)
                return detail::claim47_violation_witness(ctx, uc, w, cs.e1);
        }
    }

    if (cs.matching == 2) {
        // both sides shed their top id
        int last1 = -1, last2 = -1;
        for (int v : u1) last1 = v;
        for (int v : u2) last2 = v;
        ctx.u1_trim.reset(last1);
        ctx.u2_trim.reset(last2);
    } else if (cs.matching == 1) {
        // all crossing edges share the apex; drop it from its side
        if (cs.apex_in_u1) ctx.u1_trim.reset(cs.apex);
        else ctx.u2_trim.reset(cs.apex);
    }

    for (int w : ctx.w_set) {
        int d1 = g.degree_in(w, ctx.u1_trim);
        int d2 = g.degree_in(w, ctx.u2_trim);
        if (d1 >= m && d2 >= m) {
            int co2 = ctx.u2_trim.count() - d2;
            bool near_is_u2 = 18 * co2 < 18 + 5 * n;
            return near_is_u2 ? detail::crossing_fan_witness(ctx, w, ctx.u2_trim, ctx.u1_trim,
                                                             "claim-4.8")
                              : detail::crossing_fan_witness(ctx, w, ctx.u1_trim, ctx.u2_trim,
                                                             "claim-4.8");
        }
    }

    std::vector<int> q1, q2;
    for (int z : ctx.z_set) {
        if (g.degree_in(z, ctx.u1_trim) <= m - 1 && int(q1.size()) < m - 1) q1.push_back(z);
        if (g.degree_in(z, ctx.u2_trim) <= m - 1 && int(q2.size()) < m - 1) q2.push_back(z);
    }
    if (int(q1.size()) >= m - 1) {
        ctx.z1_order = std::move(q1);
    } else if (int(q2.size()) >= m - 1) {
        std::swap(ctx.first, ctx.second);
        std::swap(ctx.u1_trim, ctx.u2_trim);
        ctx.swapped = true;
        ctx.z1_order = std::move(q2);
    } else {
        throw TheoremViolation("claim-4.8", "no side qualifies m-1 vertices of Z");
    }
    return std::nullopt;
}

/**
 * Final unicyclic embedding: D avoids the designated pair (m-1 leaves
 * excluding t2, or degree-two vertices mixed with leaves), pins come from
 * X1 ∩ U1', and t1, t2 are pinned into X1 so their images stay adjacent in
 * the complement.
 */
inline Witness final_case_embed_uc(const ProofContext& ctx) {
    const Tree& t = ctx.pattern();
    const int m = ctx.m;
    if (int(ctx.z1_order.size()) != m - 1)
        throw PreconditionError("final case needs the Z1 assignment");
    Bitset pin_pool = ctx.first.x1 & ctx.u1_trim;
    Bitset exclude(t.order());
    exclude.set(ctx.t1);
    exclude.set(ctx.t2);

    if (t.leaf_count() >= 2 * m + 2) {
        auto d_verts = detail::pick_leaves_capped(t, m - 1, m - 4, exclude);
        if (!d_verts) throw TheoremViolation("case-1u", "cannot cap leaf selection at m-4");
        return detail::removal_plan_embed(ctx, *d_verts, m - 4, pin_pool, true, "case-1u");
    }

    Bitset f(t.order());
    f.set(ctx.t1);
    f.set(ctx.t2);
    DegreeTwoSet dts = lemma1_degree_two_set(t, f);
    std::vector<int> d_verts;
    for (int v : dts.d_set) {
        if (int(d_verts.size()) == m - 2) break; // leave room for a leaf
        d_verts.push_back(v);
    }
    if (int(d_verts.size()) < m - 1) {
        auto extra = detail::pick_leaves_capped(t, m - 1 - int(d_verts.size()), m - 6, exclude);
        if (!extra) throw TheoremViolation("case-2u", "cannot cap leaf selection at m-6");
        d_verts.insert(d_verts.end(), extra->begin(), extra->end());
        std::sort(d_verts.begin(), d_verts.end());
    }
    return detail::removal_plan_embed(ctx, d_verts, m - 5, pin_pool, true, "case-2u");
}

/**
 * The unicyclic witness engine: host on 2n-1 vertices, unicyclic pattern with
 * n >= m^2-m+1 and m >= 18. Pure cycles route through the cycle finder;
 * otherwise the pipeline mirrors the tree engine with designated-edge
 * bookkeeping: fan scan, Claim 4.1 low-max-degree embedding, anchors,
 * Claim 4.3, Claim 4.4 heavy-leaf handling, Claims 4.6-4.8, and the final
 * leaf-count split.
 */
inline Witness find_witness_unicyclic(const Graph& g, const UnicyclicGraph& uc, int m,
                                      long long budget = kDefaultSearchBudget) {
    const int n = uc.order();
    if (m < 18) throw PreconditionError("unicyclic engine requires m >= 18");
    if (n < m * m - m + 1) throw PreconditionError("unicyclic engine requires n >= m^2 - m + 1");
    if (g.order() != 2 * n - 1) throw PreconditionError("host must have 2n - 1 vertices");

    if (auto fan = find_fan(g, m))
        return detail::finish_fan_witness(g, m, n, *fan);

    Graph gbar = g.complement();

    if (uc.is_pure_cycle()) {
        CyclePlan plan = cycle_witness(gbar, g, n, m, n, budget);
        std::vector<int> map(n, -1);
        for (int i = 0; i < n; ++i) map[uc.cycle()[i]] = plan.cycle[i];
        return detail::finish_uc_witness(g, uc, std::move(map), m, uc.cycle()[0], uc.cycle()[1]);
    }

    auto [t1, t2, tree] = unicyclic_normalize(uc);

    if (g.max_degree() <= n - 1) {
        // Claim 4.1: a cycle in the complement seeds the greedy extension,
        // which cannot stall while every degree stays below n
        const int k = uc.cycle_length();
        CyclePlan plan = cycle_witness(gbar, g, k, m, n, budget);
        std::vector<int> seed(n, -1);
        for (int i = 0; i < k; ++i) seed[uc.cycle()[i]] = plan.cycle[i];
        GreedyOutcome out = greedy_extend(gbar, tree, seed);
        if (auto* full = std::get_if<std::vector<int>>(&out))
            return detail::finish_uc_witness(g, uc, std::move(*full), m, t1, t2);
        throw TheoremViolation("claim-4.1", "extension stalled though max degree is below n");
    }

    int v = 0;
    while (g.degree(v) < n) ++v;
    AnchorSets first = build_anchor_sets(g, v, g.vertex_set(), n, m);
    if (auto chk = check_anchor_sets(g, first, n, m); !chk)
        throw TheoremViolation("anchor-1", chk.violation);

    Bitset o1 = Bitset::full(g.order());
    o1 -= first.x1 | first.y1;
    int second_source = -1;
    for (int u : first.x1 | first.y1)
        if (g.degree_in(u, o1) >= n) { second_source = u; break; }
    if (second_source < 0)
        return detail::claim43_witness(g, gbar, uc, tree, t1, t2, m, first, o1);

    AnchorSets second = build_anchor_sets(g, second_source, o1, n, m);
    if (auto chk = check_anchor_sets(g, second, n, m); !chk)
        throw TheoremViolation("anchor-2", chk.violation);

    ProofContext ctx = make_context(g, gbar, tree, m, std::move(first), std::move(second));
    ctx.t1 = t1;
    ctx.t2 = t2;

    for (int x = 0; x < n; ++x)
        if (tree.leaf_neighbor_count(x) >= 2 * m - 1)
            return detail::claim44_witness(ctx, uc, x);
    if (9 * tree.max_degree() >= 5 * n)
        throw TheoremViolation("claim-4.4", "max tree degree >= 5n/9 without a heavy vertex");

    if (auto w = enforce_bipartite_structure_uc(ctx, uc)) return std::move(*w);
    return final_case_embed_uc(ctx);
}

} // namespace ramsey
