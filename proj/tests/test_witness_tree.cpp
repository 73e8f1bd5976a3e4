#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/witness_tree.hpp"

using namespace ramsey;

namespace {

constexpr int kM = 9, kN = 73, kHost = 145;

/// Planted proof context: X1 = [0,65), X2 = [65,130), Z = [130,145), with a
/// complete bipartite X1-X2 core that individual tests then perturb.
struct PlantedContext {
    Graph g{kHost};
    Graph gbar;

    PlantedContext() {
        for (int a = 0; a < 65; ++a)
            for (int b = 65; b < 130; ++b) g.add_edge(a, b);
    }

    /// Z becomes complete to X2 in G (so claims 3.5 and 3.6 pass and Z1
    /// qualifies on side 1).
    void densify_z_to_x2() {
        for (int z = 130; z < kHost; ++z)
            for (int b = 65; b < 111; ++b) g.add_edge(z, b);
    }

    ProofContext make(const Tree& t) {
        gbar = g.complement();
        AnchorSets a1, a2;
        a1.source = 130;
        a1.restriction = g.vertex_set();
        a1.x1 = Bitset(kHost);
        for (int v = 0; v < 65; ++v) a1.x1.set(v);
        a1.y1 = Bitset(kHost);
        a1.u1 = a1.x1;
        a2.source = 131;
        a2.restriction = g.vertex_set();
        a2.x1 = Bitset(kHost);
        for (int v = 65; v < 130; ++v) a2.x1.set(v);
        a2.y1 = Bitset(kHost);
        a2.u1 = a2.x1;
        return make_context(g, gbar, t, kM, a1, a2);
    }
};

void require_verified(const Witness& w) {
    CheckResult chk = check_embedding(w.embedding);
    INFO(chk.violation);
    REQUIRE(chk.ok);
}

} // namespace

TEST_CASE("greedy extension completes in a complete complement") {
    Tree t = random_tree(kN, 1);
    std::vector<int> seed(kN, -1);
    seed[0] = 0;
    GreedyOutcome out = greedy_extend(Graph::complete(kHost), t, seed);
    REQUIRE(std::holds_alternative<std::vector<int>>(out));
}

TEST_CASE("greedy extension reports the blocking vertex with its degree bound") {
    // complement = two disjoint cliques (72 and 73); G = the crossing join
    Graph gbar(kHost);
    for (int u = 0; u < 72; ++u)
        for (int v = u + 1; v < 72; ++v) gbar.add_edge(u, v);
    for (int u = 72; u < kHost; ++u)
        for (int v = u + 1; v < kHost; ++v) gbar.add_edge(u, v);
    Graph g = gbar.complement();

    std::vector<int> seed(kN, -1);
    seed[0] = 0; // lands inside the 72-clique, one vertex short
    GreedyOutcome out = greedy_extend(gbar, Tree::path(kN), seed);
    REQUIRE(std::holds_alternative<StuckReport>(out));
    StuckReport r = std::get<StuckReport>(out);
    REQUIRE(r.free_count >= kN);
    REQUIRE(g.degree(r.host_vertex) >= r.free_count);
}

TEST_CASE("greedy extension validates its seed") {
    Tree t = Tree::path(10);
    std::vector<int> bad(10, -1);
    REQUIRE_THROWS_AS(greedy_extend(Graph::complete(20), t, bad), PreconditionError);
    bad[0] = 0;
    bad[5] = 1; // disconnected seeded part
    REQUIRE_THROWS_AS(greedy_extend(Graph::complete(20), t, bad), PreconditionError);
}

TEST_CASE("anchor selection: wide independent neighborhood") {
    // star of degree 2n-2: case 1, Y1 empty
    Graph g(kHost);
    for (int v = 1; v < kHost; ++v) g.add_edge(0, v);
    AnchorSets a = build_anchor_sets(g, 0, g.vertex_set(), kN, kM);
    REQUIRE(a.x1.count() == kN - kM + 1);
    REQUIRE(a.y1.none());
    REQUIRE(a.u1 == a.x1);
    REQUIRE(check_anchor_sets(g, a, kN, kM).ok);
}

TEST_CASE("anchor selection: exact narrow case absorbs Y_v") {
    // v = 0 adjacent to 8 disjoint matched pairs plus 57 independents:
    // |U_v| = n - 2m + 2 exactly, forcing the third selection case
    Graph g(kHost);
    int next = 1;
    for (int i = 0; i < kM - 1; ++i) {
        g.add_edge(0, next);
        g.add_edge(0, next + 1);
        g.add_edge(next, next + 1);
        next += 2;
    }
    for (int i = 0; i < kN - 2 * kM + 2; ++i) g.add_edge(0, next++);
    REQUIRE(g.degree(0) == kN);
    AnchorSets a = build_anchor_sets(g, 0, g.vertex_set(), kN, kM);
    REQUIRE((a.x1 | a.y1).count() == kN - kM + 1);
    REQUIRE(a.u1.count() == kN - 2 * kM + 2);
    CheckResult chk = check_anchor_sets(g, a, kN, kM);
    INFO(chk.violation);
    REQUIRE(chk.ok);
}

TEST_CASE("anchor selection demands a high-degree source") {
    Graph g(kHost);
    g.add_edge(0, 1);
    REQUIRE_THROWS_AS(build_anchor_sets(g, 0, g.vertex_set(), kN, kM), PreconditionError);
}

TEST_CASE("anchor invariants on a near-extremal host") {
    Graph g = test_support::near_extremal_145();
    g.add_edge(144, 0); // vertex 0 now has degree n with an independent neighborhood
    AnchorSets a = build_anchor_sets(g, 0, g.vertex_set(), kN, kM);
    REQUIRE(check_anchor_sets(g, a, kN, kM).ok);
}

TEST_CASE("pinned forest placement fills X1 then spills A-vertices into Y1") {
    Tree t = random_tree(kN, 5);
    Bitset removed = detail::prune_lowest_leaves(t, kM - 1);
    REQUIRE(removed.count() == kM - 1);

    Bitset x1(kHost), y1(kHost);
    for (int v = 0; v < 60; ++v) x1.set(v);
    for (int v = 60; v < 65; ++v) y1.set(v);
    std::vector<int> map = embed_forest_pinned(t, removed, {}, x1, y1, kM);

    int placed = 0;
    for (int v = 0; v < kN; ++v) {
        if (removed.test(v)) {
            REQUIRE(map[v] == -1);
            continue;
        }
        ++placed;
        REQUIRE((x1.test(map[v]) || y1.test(map[v])));
        if (y1.test(map[v])) REQUIRE(t.side_a().test(v)); // Y1 gets only A-vertices
    }
    REQUIRE(placed == kN - kM + 1);

    // forest edges land on complement edges (host empty: always true), and
    // pins are honored
    int pin_target = x1.first_set();
    int pin_vertex = -1;
    for (int v = 0; v < kN; ++v)
        if (!removed.test(v)) { pin_vertex = v; break; }
    std::vector<int> map2 =
        embed_forest_pinned(t, removed, {{pin_vertex, pin_target}}, x1, y1, kM);
    REQUIRE(map2[pin_vertex] == pin_target);
}

TEST_CASE("pinned forest placement enforces budget and capacity") {
    Tree star = Tree::star(kN); // A = 72 leaves
    Bitset none(kN);
    Bitset x1(kHost), y1(kHost);
    for (int v = 0; v < 60; ++v) x1.set(v);
    // capacity: 73 vertices cannot fit in 60
    REQUIRE_THROWS_AS(embed_forest_pinned(star, none, {}, x1, y1, kM), PreconditionError);

    // budget: removing m+2 A-side vertices overshoots m+1
    Bitset removed(kN);
    int taken = 0;
    for (int v : star.side_a()) {
        if (taken == kM + 2) break;
        removed.set(v);
        ++taken;
    }
    for (int v = 60; v < 75; ++v) y1.set(v);
    REQUIRE_THROWS_AS(embed_forest_pinned(star, removed, {}, x1, y1, kM), PreconditionError);
}

TEST_CASE("heavy-leaf handling, star-center branch") {
    Tree broom = test_support::broom(kN, kM - 1);
    Graph host = test_support::near_extremal_145();
    Graph gbar = host.complement();
    Witness w = heavy_leaf_witness(host, gbar, broom, kM, kN - kM);
    REQUIRE(w.kind == WitnessKind::TreeInComplement);
    require_verified(w);
}

TEST_CASE("heavy-leaf handling, high-degree branch") {
    Graph host(kHost);
    for (int v = 1; v <= kN + kM - 1; ++v) host.add_edge(0, v); // degree n+m-1, independent
    Graph gbar = host.complement();
    Tree broom = test_support::broom(kN, kM - 1);
    Witness w = heavy_leaf_witness(host, gbar, broom, kM, kN - kM);
    REQUIRE(w.kind == WitnessKind::TreeInComplement);
    require_verified(w);
}

TEST_CASE("heavy-leaf handling, empty host") {
    Graph host(kHost);
    Graph gbar = host.complement();
    Witness w = heavy_leaf_witness(host, gbar, Tree::star(kN), kM, 0);
    require_verified(w);
}

TEST_CASE("bipartite structure: near-complete contexts pass and assign Z1") {
    PlantedContext p;
    p.densify_z_to_x2();
    Tree t = Tree::path(kN);
    ProofContext ctx = p.make(t);
    auto w = enforce_bipartite_structure(ctx);
    REQUIRE(!w);
    REQUIRE(int(ctx.z1_order.size()) == kM - 1);
    for (int z : ctx.z1_order) REQUIRE(p.g.degree_in(z, ctx.first.u1) <= kM - 1);
}

TEST_CASE("bipartite structure: crossing complement degree 2m-2 yields a split witness") {
    PlantedContext p;
    for (int b = 65; b < 65 + 2 * kM - 2; ++b) p.g.remove_edge(0, b);
    Tree t = Tree::path(kN);
    ProofContext ctx = p.make(t);
    auto w = enforce_bipartite_structure(ctx);
    REQUIRE(w);
    REQUIRE(w->kind == WitnessKind::TreeInComplement);
    require_verified(*w);
}

TEST_CASE("bipartite structure: a W vertex rich on both sides yields a split witness") {
    PlantedContext p; // Z empty to both sides: both complement degrees are 65
    Tree t = random_tree(kN, 8);
    ProofContext ctx = p.make(t);
    auto w = enforce_bipartite_structure(ctx);
    REQUIRE(w);
    REQUIRE(w->kind == WitnessKind::TreeInComplement);
    require_verified(*w);
}

TEST_CASE("bipartite structure: a W vertex dense on both sides yields a fan") {
    PlantedContext p;
    p.densify_z_to_x2(); // passes claim 3.5
    for (int a = 0; a < kM; ++a) p.g.add_edge(130, a);
    Tree t = Tree::path(kN);
    ProofContext ctx = p.make(t);
    auto w = enforce_bipartite_structure(ctx);
    REQUIRE(w);
    REQUIRE(w->kind == WitnessKind::FanInG);
    require_verified(*w);
}

TEST_CASE("final case embeddings on both sides of the leaf threshold") {
    // paths trigger the degree-two case, caterpillars the leaf case
    for (const Tree& t : {Tree::path(kN), test_support::caterpillar(kN), random_tree(kN, 13)}) {
        PlantedContext p;
        p.densify_z_to_x2();
        ProofContext ctx = p.make(t);
        REQUIRE(!enforce_bipartite_structure(ctx));
        Witness w = final_case_embed(ctx);
        REQUIRE(w.kind == WitnessKind::TreeInComplement);
        require_verified(w);
    }
}

TEST_CASE("tree engine rejects out-of-hypothesis inputs") {
    REQUIRE_THROWS_AS(find_witness_tree(Graph(145), Tree::path(73), 8), PreconditionError);
    REQUIRE_THROWS_AS(find_witness_tree(Graph(145), Tree::path(72), 9), PreconditionError);
    REQUIRE_THROWS_AS(find_witness_tree(Graph(144), Tree::path(73), 9), PreconditionError);
}

TEST_CASE("tree engine trivial hosts") {
    Witness fan = find_witness_tree(Graph::complete(kHost), random_tree(kN, 2), kM);
    REQUIRE(fan.kind == WitnessKind::FanInG);
    require_verified(fan);

    Witness tree = find_witness_tree(Graph(kHost), random_tree(kN, 3), kM);
    REQUIRE(tree.kind == WitnessKind::TreeInComplement);
    require_verified(tree);
}

TEST_CASE("tree engine handles random hosts across densities") {
    int idx = 0;
    for (double p : {0.1, 0.5, 0.9}) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            Graph g = random_graph(kHost, p, 100 + seed);
            Tree t = random_tree(kN, 200 + seed + idx);
            Witness w = find_witness_tree(g, t, kM);
            require_verified(w);
        }
        ++idx;
    }
}

TEST_CASE("tree engine runs the anchor passes on the near-extremal host") {
    // K_{72,72} with the extra vertex joined to one side: the first greedy
    // pass dead-ends inside a 72-clique of the complement, forcing anchors
    Graph g = test_support::near_extremal_145();
    for (int a = 0; a < 72; ++a) g.add_edge(144, a);
    for (const Tree& t : {Tree::path(kN), random_tree(kN, 21)}) {
        Witness w = find_witness_tree(g, t, kM);
        REQUIRE(w.kind == WitnessKind::TreeInComplement);
        require_verified(w);
    }
}

TEST_CASE("tree engine is deterministic") {
    Graph g = random_graph(kHost, 0.05, 4242);
    Tree t = random_tree(kN, 77);
    Witness a = find_witness_tree(g, t, kM);
    Witness b = find_witness_tree(g, t, kM);
    REQUIRE(a.kind == b.kind);
    REQUIRE(a.embedding.map == b.embedding.map);
    REQUIRE(witness_to_json(a).dump() == witness_to_json(b).dump());
}

TEST_CASE("witness JSON carries the stable field order") {
    Witness w = find_witness_tree(Graph(kHost), Tree::path(kN), kM);
    std::string s = witness_to_json(w).dump();
    REQUIRE(s.find("\"kind\"") < s.find("\"map\""));
    REQUIRE(s.find("\"map\"") < s.find("\"m\""));
    REQUIRE(s.find("\"m\"") < s.find("\"n\""));
}
