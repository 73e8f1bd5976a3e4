#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"

using namespace ramsey;

TEST_CASE("complement of K5 is the empty graph") {
    Graph c = Graph::complete(5).complement();
    REQUIRE(c.order() == 5);
    REQUIRE(c.edge_count() == 0);
}

TEST_CASE("complement is an involution") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_graph(10, 0.4, seed);
        REQUIRE(g.complement().complement() == g);
    }
}

TEST_CASE("complement of K_{4,4} is two disjoint 4-cliques") {
    Graph c = Graph::complete_bipartite(4, 4).complement();
    auto comps = c.components();
    REQUIRE(comps.size() == 2);
    for (const auto& comp : comps) {
        REQUIRE(comp.count() == 4);
        for (int u : comp)
            REQUIRE(c.degree_in(u, comp) == 3);
    }
}

TEST_CASE("degree_in matches a naive edge scan") {
    Graph k5 = Graph::complete(5);
    Bitset s(5);
    s.set(1);
    s.set(2);
    s.set(3);
    REQUIRE(k5.degree_in(0, s) == 3);

    Graph empty(12);
    REQUIRE(empty.degree_in(3, Bitset::full(12)) == 0);

    Rng rng(99);
    Graph g = random_graph(12, 0.5, 7);
    for (int trial = 0; trial < 50; ++trial) {
        Bitset sub(12);
        for (int v = 0; v < 12; ++v)
            if (rng.next() & 1) sub.set(v);
        int v = rng.below_int(12);
        int naive = 0;
        for (int w : sub)
            if (g.has_edge(v, w)) ++naive;
        REQUIRE(g.degree_in(v, sub) == naive);
    }
}

TEST_CASE("degree splits between a graph and its complement") {
    Graph g = random_graph(20, 0.3, 5);
    Graph c = g.complement();
    Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        Bitset s(20);
        for (int v = 0; v < 20; ++v)
            if (rng.next() & 1) s.set(v);
        int v = rng.below_int(20);
        Bitset s_minus_v = s;
        s_minus_v.reset(v);
        REQUIRE(g.degree_in(v, s) + c.degree_in(v, s_minus_v) == s_minus_v.count());
    }
}

TEST_CASE("random_graph endpoints and determinism") {
    REQUIRE(random_graph(15, 0.0, 3).edge_count() == 0);
    REQUIRE(random_graph(15, 1.0, 3).edge_count() == 15 * 14 / 2);
    REQUIRE(random_graph(20, 0.5, 7) == random_graph(20, 0.5, 7));
    REQUIRE(!(random_graph(20, 0.5, 7) == random_graph(20, 0.5, 8)));
}

TEST_CASE("graph6 golden strings") {
    REQUIRE(write_graph6(Graph(1)) == "@");
    REQUIRE(write_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    REQUIRE(write_graph6(Graph::complete(3)) == "Bw");
    REQUIRE(write_graph6(Graph::complete(5)) == "D~{");

    // 5-vertex star centered at vertex 4
    Graph star = parse_graph6("D?{");
    REQUIRE(star.order() == 5);
    REQUIRE(star.edge_count() == 4);
    for (int v = 0; v < 4; ++v) REQUIRE(star.has_edge(v, 4));
    REQUIRE(write_graph6(star) == "D?{");
}

TEST_CASE("graph6 round-trips on random graphs up to 64 vertices") {
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + int(rng.below(64));
        Graph g = random_graph(n, rng.unit(), rng.next());
        Graph back = parse_graph6(write_graph6(g));
        REQUIRE(back == g);
    }
}

TEST_CASE("graph6 agrees with an independent decoder") {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + int(rng.below(70)); // crosses the 63-vertex header boundary
        Graph g = random_graph(n, 0.5, rng.next());
        REQUIRE(test_support::alt_parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("graph6 error handling") {
    REQUIRE_THROWS_AS(parse_graph6(""), Graph6Error);
    REQUIRE_THROWS_AS(parse_graph6("D?"), Graph6Error);        // truncated payload
    REQUIRE_THROWS_AS(parse_graph6("D?{?"), Graph6Error);      // trailing garbage
    REQUIRE_THROWS_AS(parse_graph6("\x1f"), Graph6Error);      // malformed header
    REQUIRE_THROWS_AS(parse_graph6("D?\x1f"), Graph6Error);    // bad payload byte
    REQUIRE_THROWS_AS(parse_graph6("~??"), Graph6Error);       // truncated long header
}

TEST_CASE("graph6 long-form header boundary") {
    Graph g63 = random_graph(63, 0.3, 2);
    std::string s = write_graph6(g63);
    REQUIRE(static_cast<unsigned char>(s[0]) == 126);
    REQUIRE(parse_graph6(s) == g63);

    std::ostringstream ss;
    ss << write_graph6(Graph::complete(4)) << "\n"
       << ">>graph6<<" << write_graph6(Graph(3)) << "\n\n";
    std::istringstream in(ss.str());
    auto graphs = read_graph6_lines(in);
    REQUIRE(graphs.size() == 2);
    REQUIRE(graphs[0] == Graph::complete(4));
    REQUIRE(graphs[1] == Graph(3));
}
