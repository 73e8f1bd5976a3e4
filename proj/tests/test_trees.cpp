#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/tree.hpp"

using namespace ramsey;

TEST_CASE("bipartition basics") {
    Tree p4 = Tree::path(4);
    REQUIRE(p4.side_a().count() == 2);
    REQUIRE(p4.side_b().count() == 2);

    Tree s6 = Tree::star(6);
    REQUIRE(s6.side_a() == s6.leaves());
    REQUIRE(s6.side_b().count() == 1);
    REQUIRE(s6.side_b().test(0));
}

TEST_CASE("bipartition is a proper 2-coloring") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Tree t = random_tree(50, seed);
        for (auto [u, v] : t.edges()) {
            REQUIRE(t.side_a().test(u) != t.side_a().test(v));
            REQUIRE(t.side_b().test(u) != t.side_b().test(v));
        }
        REQUIRE(t.side_a().count() + t.side_b().count() == 50);
        REQUIRE(t.side_a().count() >= t.side_b().count());
    }
}

TEST_CASE("prufer decoding basics") {
    Tree edge = prufer_decode(2, {});
    REQUIRE(edge.order() == 2);
    REQUIRE(edge.has_edge(0, 1));

    Tree star = prufer_decode(8, {0, 0, 0, 0, 0, 0});
    REQUIRE(star.degree(0) == 7);
    for (int v = 1; v < 8; ++v) REQUIRE(star.degree(v) == 1);
}

TEST_CASE("prufer degrees count occurrences plus one") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + int(rng.below(60));
        std::vector<int> seq(n - 2);
        for (auto& x : seq) x = rng.below_int(n);
        Tree t = prufer_decode(n, seq);
        for (int v = 0; v < n; ++v) {
            int occ = int(std::count(seq.begin(), seq.end(), v));
            REQUIRE(t.degree(v) == occ + 1);
        }
        REQUIRE(prufer_decode(n, prufer_encode(t)).edges() == t.edges());
    }
    REQUIRE_THROWS_AS(prufer_decode(5, {0, 7, 1}), TreeError);
}

TEST_CASE("random_tree is deterministic per seed") {
    REQUIRE(random_tree(40, 9).edges() == random_tree(40, 9).edges());
    REQUIRE(random_tree(40, 9).edges() != random_tree(40, 10).edges());
}

TEST_CASE("unicyclic normalization of a triangle with a pendant") {
    UnicyclicGraph u(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    REQUIRE(u.cycle_length() == 3);
    auto [t1, t2, tree] = unicyclic_normalize(u);
    REQUIRE(t1 == 0); // the cycle vertex of degree 3
    REQUIRE(tree.degree(t1) == 2);
    REQUIRE(tree.max_degree() == 2); // a path shape
    REQUIRE(tree.leaf_count() == 2);
    (void)t2;
}

TEST_CASE("pure cycles are rejected by normalization") {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < 5; ++v) es.emplace_back(v, (v + 1) % 5);
    UnicyclicGraph c5(5, es);
    REQUIRE(c5.is_pure_cycle());
    REQUIRE_THROWS_AS(unicyclic_normalize(c5), TreeError);
}

TEST_CASE("unicyclic inputs are validated") {
    REQUIRE_THROWS_AS(UnicyclicGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 1}}), TreeError);
    REQUIRE_THROWS_AS(UnicyclicGraph(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 3}}), TreeError);
}

TEST_CASE("random unicyclic graphs normalize cleanly") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        UnicyclicGraph u = random_unicyclic(40, seed);
        if (u.is_pure_cycle()) continue;
        auto [t1, t2, tree] = unicyclic_normalize(u);
        REQUIRE(tree.order() == 40);
        REQUIRE(tree.degree(t1) >= 2);
        REQUIRE(u.to_graph().has_edge(t1, t2));
    }
}

TEST_CASE("tree and unicyclic JSON round-trips") {
    Tree t = random_tree(30, 3);
    Tree back = tree_from_json(tree_to_json(t));
    REQUIRE(back.edges() == t.edges());

    UnicyclicGraph u = random_unicyclic(30, 4);
    UnicyclicGraph uback = unicyclic_from_json(unicyclic_to_json(u));
    REQUIRE(uback.edges() == u.edges());
    REQUIRE(uback.t1() == u.t1());
    REQUIRE(uback.t2() == u.t2());

    // t1/t2 computed when absent
    ordered_json j = unicyclic_to_json(u);
    j.erase("t1");
    j.erase("t2");
    UnicyclicGraph recomputed = unicyclic_from_json(j);
    REQUIRE(recomputed.t1() == u.t1());
}
