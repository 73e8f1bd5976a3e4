#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "ramsey/matching.hpp"
#include "ramsey/oracle.hpp"

using namespace ramsey;
using test_support::brute_max_matching_size;

TEST_CASE("matching on small fixed graphs") {
    REQUIRE(max_matching(Graph::complete(4)).edges.size() == 2);
    REQUIRE(max_matching(Graph::cycle(5)).edges.size() == 2);
    REQUIRE(max_matching(test_support::petersen()).edges.size() == 5);
    REQUIRE(brute_max_matching_size(test_support::petersen()) == 5);
}

TEST_CASE("matching edges are disjoint host edges with a valid certificate") {
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + int(rng.below(12));
        Graph g = random_graph(n, rng.unit(), rng.next());
        MatchingResult r = max_matching(g);
        Bitset seen(n);
        for (auto [a, b] : r.edges) {
            REQUIRE(g.has_edge(a, b));
            REQUIRE(!seen.test(a));
            REQUIRE(!seen.test(b));
            seen.set(a);
            seen.set(b);
        }
        REQUIRE(seen == r.covered);
        REQUIRE(r.certified);
        REQUIRE(verify_tutte_berge(g, g.vertex_set(), r));
        REQUIRE(int(r.edges.size()) == brute_max_matching_size(g));
    }
}

TEST_CASE("matching equals the exhaustive optimum on all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : canonical_graphs(n)) {
            MatchingResult r = max_matching(g);
            REQUIRE(int(r.edges.size()) == brute_max_matching_size(g));
            REQUIRE(verify_tutte_berge(g, g.vertex_set(), r));
        }
    }
}

TEST_CASE("matching restricted to an induced set") {
    Graph g = Graph::complete(8);
    Bitset active(8);
    for (int v = 0; v < 5; ++v) active.set(v);
    MatchingResult r = max_matching_in(g, active);
    REQUIRE(r.edges.size() == 2);
    REQUIRE(r.covered.is_subset_of(active));
    REQUIRE(verify_tutte_berge(g, active, r));

    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        Graph h = random_graph(12, 0.5, rng.next());
        Bitset sub(12);
        for (int v = 0; v < 12; ++v)
            if (rng.next() & 1) sub.set(v);
        MatchingResult mr = max_matching_in(h, sub);
        // compare against brute force on the induced subgraph
        Graph induced(12);
        for (auto [a, b] : h.edges())
            if (sub.test(a) && sub.test(b)) induced.add_edge(a, b);
        REQUIRE(int(mr.edges.size()) == brute_max_matching_size(induced));
        REQUIRE(verify_tutte_berge(h, sub, mr));
    }
}

TEST_CASE("early-stopped runs are not certified") {
    Graph g = Graph::complete(10);
    MatchingResult r = max_matching_in(g, g.vertex_set(), 3);
    REQUIRE(r.edges.size() >= 3);
    REQUIRE(!r.certified);
}
