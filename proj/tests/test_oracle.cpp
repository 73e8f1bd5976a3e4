#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "helpers.hpp"
#include "ramsey/fan.hpp"
#include "ramsey/oracle.hpp"

using namespace ramsey;

TEST_CASE("embedding checker accepts identities and rejects collapses") {
    Graph g = random_graph(8, 0.5, 3);
    std::vector<int> id(8);
    std::iota(id.begin(), id.end(), 0);
    REQUIRE(check_embedding({g, g, id, false}).ok);

    std::vector<int> collapsed = id;
    collapsed[3] = 4;
    CheckResult r = check_embedding({g, g, collapsed, false});
    REQUIRE(!r.ok);
    REQUIRE(r.violation.find("share image") != std::string::npos);

    // a missing pattern edge is named
    Graph p3 = Tree::path(3).to_graph();
    CheckResult bad = check_embedding({p3, Graph(3), {0, 1, 2}, false});
    REQUIRE(!bad.ok);
    REQUIRE(bad.violation.find("non-edge") != std::string::npos);
}

TEST_CASE("extremal construction at n = 5") {
    Graph g = extremal_graph(5);
    REQUIRE(g.order() == 8);
    REQUIRE(g.edge_count() == 16);
    REQUIRE(!brute_contains(g, Graph::complete(3)));
    REQUIRE(!find_fan(g, 1));
}

TEST_CASE("extremal complement splits into two cliques of size n-1") {
    for (int n = 2; n <= 20; ++n) {
        auto comps = extremal_graph(n).complement().components();
        REQUIRE(comps.size() == 2);
        for (const auto& c : comps) REQUIRE(c.count() == n - 1);
    }
}

TEST_CASE("brute containment basics") {
    REQUIRE(brute_contains(Graph::complete(3), Tree::path(3).to_graph()));
    REQUIRE(!brute_contains(Graph::complete_bipartite(4, 4), fan_pattern(2)));

    auto emb = brute_contains(test_support::petersen(), Graph::cycle(5));
    REQUIRE(emb);
    REQUIRE(check_embedding(*emb).ok);
}

TEST_CASE("brute containment is invariant under host relabeling") {
    Rng rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        Graph host = random_graph(9, 0.4, rng.next());
        Graph pattern = random_tree(5, rng.next()).to_graph();
        bool base = brute_contains(host, pattern).has_value();
        // random permutation of the host
        std::vector<int> perm(9);
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 8; i > 0; --i) std::swap(perm[i], perm[rng.below_int(i + 1)]);
        Graph relabeled(9);
        for (auto [u, v] : host.edges()) relabeled.add_edge(perm[u], perm[v]);
        REQUIRE(brute_contains(relabeled, pattern).has_value() == base);
    }
}

TEST_CASE("canonical enumeration counts") {
    auto levels = canonical_mask_levels(7);
    std::vector<std::size_t> expected{0, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) REQUIRE(levels[n].size() == expected[n]);
}

TEST_CASE("tiny Ramsey numbers") {
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    REQUIRE(brute_ramsey(k2, k2, 4) == 2);

    Graph p3 = Tree::path(3).to_graph();
    REQUIRE(brute_ramsey(p3, fan_pattern(1), 6) == 5);

    Graph p4 = Tree::path(4).to_graph();
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    REQUIRE(brute_ramsey(p4, two_k2, 6) == 5); // matches n + m - 1 = 5

    REQUIRE(!brute_ramsey(Graph::complete(4), Graph::complete(4), 6)); // exceeds the cap
}

TEST_CASE("Ramsey symmetry on small pairs") {
    Graph p3 = Tree::path(3).to_graph();
    Graph p4 = Tree::path(4).to_graph();
    Graph k3 = Graph::complete(3);
    REQUIRE(brute_ramsey(p3, p4, 6) == brute_ramsey(p4, p3, 6));
    REQUIRE(brute_ramsey(p3, k3, 6) == brute_ramsey(k3, p3, 6));
}
