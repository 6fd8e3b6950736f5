#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"

using namespace cospec;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph6 decodes the hand-checked strings") {
    Graph k4 = from_graph6("C~");
    REQUIRE(k4.order() == 4);
    REQUIRE(k4.edge_count() == 6);
    REQUIRE(k4 == complete_graph(4));

    Graph two = from_graph6("A?");
    REQUIRE(two.order() == 2);
    REQUIRE(two.edge_count() == 0);

    REQUIRE(to_graph6(from_graph6("DQc")) == "DQc");
}

TEST_CASE("graph6 encodes the hand-checked strings") {
    REQUIRE(to_graph6(complete_graph(4)) == "C~");
    REQUIRE(to_graph6(Graph(3)) == "B?");
    // path 0-1-2: column bits x01=1, x02=0, x12=1 -> 101000 -> 40+63='g'
    REQUIRE(to_graph6(path_graph(3)) == "Bg");
}

TEST_CASE("graph6 rejects malformed input") {
    REQUIRE_THROWS_AS(from_graph6(""), Graph6Error);
    REQUIRE_THROWS_AS(from_graph6("C~~"), Graph6Error);     // too long
    REQUIRE_THROWS_AS(from_graph6("C"), Graph6Error);       // too short
    REQUIRE_THROWS_AS(from_graph6("B:"), Graph6Error);      // byte < 63
    REQUIRE_THROWS_AS(from_graph6("A@"), Graph6Error);      // nonzero padding
    REQUIRE_THROWS_AS(from_graph6("~??A"), Graph6Error);    // long form
    REQUIRE_THROWS_WITH(from_graph6("B:"), Catch::Matchers::ContainsSubstring("byte 1"));
}

TEST_CASE("graph6 round-trips random graphs up to order 62") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 400; ++iter) {
        int n = static_cast<int>(rng() % 63);
        Graph g = random_graph(rng, n, 0.3);
        Graph h = from_graph6(to_graph6(g));
        REQUIRE(g == h);
    }
}

TEST_CASE("vertex deletion compacts indices in order") {
    REQUIRE(delete_vertices(complete_graph(4), {0}) == complete_graph(3));

    Graph p4 = delete_vertices(cycle_graph(5), {0});
    REQUIRE(p4 == path_graph(4));

    Graph c5 = cycle_graph(5);
    REQUIRE(delete_vertices(c5, {}) == c5);

    REQUIRE_THROWS_AS(delete_vertices(c5, {5}), std::out_of_range);
}

TEST_CASE("sequential deletion equals set deletion under compaction") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng() % 12);
        Graph g = random_graph(rng, n, 0.4);
        int a = static_cast<int>(rng() % n);
        int b = static_cast<int>(rng() % n);
        if (a == b) continue;
        int b_compacted = b > a ? b - 1 : b;
        Graph two_step = delete_vertices(delete_vertices(g, {a}), {b_compacted});
        VertexSet both{std::min(a, b), std::max(a, b)};
        REQUIRE(two_step == delete_vertices(g, both));
    }
}

TEST_CASE("edge deletion") {
    Graph g = delete_edge(complete_graph(4), Edge(0, 1));
    std::vector<int> degs;
    for (int v = 0; v < 4; ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    REQUIRE(degs == std::vector<int>{2, 2, 3, 3});

    Graph c4 = cycle_graph(4);
    Graph p = delete_edge(c4, Edge(3, 0));
    REQUIRE(p == path_graph(4));

    Graph tri = complete_graph(3);
    Graph path = delete_edge(tri, Edge(0, 1));
    REQUIRE(path.degree(2) == 2);
    REQUIRE(path.degree(0) == 1);

    REQUIRE_THROWS_AS(delete_edge(c4, Edge(0, 2)), std::invalid_argument);
}

TEST_CASE("neighborhoods are sorted") {
    REQUIRE(neighborhood(complete_graph(4), 2) == VertexSet{0, 1, 3});
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    REQUIRE(neighborhood(star, 0) == VertexSet{1, 2, 3});
    REQUIRE(neighborhood(cycle_graph(5), 0) == VertexSet{1, 4});
}

TEST_CASE("connectivity and regularity") {
    REQUIRE(is_connected(complete_graph(4)));
    REQUIRE(is_k_regular(complete_graph(4), 3));

    Graph two_triangles(6);
    for (int base : {0, 3}) {
        two_triangles.add_edge(base, base + 1);
        two_triangles.add_edge(base + 1, base + 2);
        two_triangles.add_edge(base, base + 2);
    }
    REQUIRE_FALSE(is_connected(two_triangles));

    REQUIRE(is_k_regular(cycle_graph(5), 2));
    REQUIRE_FALSE(is_k_regular(cycle_graph(5), 3));
    REQUIRE_FALSE(is_connected(Graph(0)));
}

TEST_CASE("degree sum stays twice the edge count after deletions") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 3 + static_cast<int>(rng() % 10);
        Graph g = random_graph(rng, n, 0.5);
        VertexSet X;
        for (int v = 0; v < n; ++v)
            if (rng() % 3 == 0) X.push_back(v);
        Graph h = delete_vertices(g, X);
        int degsum = 0;
        for (int v = 0; v < h.order(); ++v) degsum += h.degree(v);
        REQUIRE(degsum == 2 * h.edge_count());
    }
}
