#include <catch2/catch_amalgamated.hpp>

#include "cospec/catalog.hpp"
#include "cospec/removal.hpp"
#include "cospec/walks.hpp"
#include "graphs_util.hpp"

using namespace cospec;

namespace {

std::vector<Bijection> all_bijections(const VertexSet& S, const VertexSet& T) {
    std::vector<Bijection> out;
    VertexSet img = T;
    std::sort(img.begin(), img.end());
    do {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (size_t i = 0; i < S.size(); ++i) pairs.emplace_back(S[i], img[i]);
        out.emplace_back(std::move(pairs));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace

TEST_CASE("removal_cospectral base cases") {
    Graph c6 = cycle_graph(6);
    VertexSet all{0, 1, 2, 3, 4, 5};
    REQUIRE(removal_cospectral(c6, all, c6, all, Bijection::identity_on(all)));
    REQUIRE(removal_cospectral(c6, {0}, c6, {3}, Bijection({{0, 3}})));

    // end vs middle of P3: the vertex-deleted graphs P2 and 2K1 differ
    Graph p3 = path_graph(3);
    REQUIRE_FALSE(removal_cospectral(p3, {0}, p3, {1}, Bijection({{0, 1}})));

    REQUIRE_THROWS_AS(removal_cospectral(p3, {0, 2}, p3, {1}, Bijection({{0, 1}})),
                      std::invalid_argument);
}

TEST_CASE("removal_cospectral_full oracle") {
    Graph c6 = cycle_graph(6);
    VertexSet s{0, 1, 2};
    REQUIRE(removal_cospectral_full(c6, s, c6, s, Bijection::identity_on(s)));

    Graph p3 = path_graph(3);
    REQUIRE_FALSE(removal_cospectral_full(p3, {0}, p3, {1}, Bijection({{0, 1}})));

    Graph big(13);
    VertexSet huge;
    for (int i = 0; i < 13; ++i) huge.push_back(i);
    REQUIRE_THROWS_AS(removal_cospectral_full(big, huge, big, huge, Bijection::identity_on(huge)),
                      std::invalid_argument);
}

TEST_CASE("two-deletion criterion equals the full definition on cubic graphs up to order 8") {
    for (int order : {4, 6, 8}) {
        Catalog cat = generate_cubic(order);
        for (size_t gi = 0; gi < cat.size(); ++gi) {
            Graph g = cat.graph(gi);
            DeletionSpectra ds(g);
            for (Vertex u = 0; u < order; ++u)
                for (Vertex v = 0; v < order; ++v) {
                    VertexSet S = neighborhood(g, u), T = neighborhood(g, v);
                    for (const Bijection& f : all_bijections(S, T)) {
                        DeletionSpectra ds2(g);
                        bool fast = removal_cospectral(ds, S, ds2, T, f);
                        bool full = removal_cospectral_full(g, S, g, T, f);
                        REQUIRE(fast == full);
                    }
                }
        }
    }
}

TEST_CASE("find_bijections") {
    // automorphic singletons: exactly the one map
    Graph c5 = cycle_graph(5);
    auto maps = find_bijections(c5, {0}, c5, {2});
    REQUIRE(maps.size() == 1);
    REQUIRE(maps[0] == Bijection({{0, 2}}));

    // asymmetric pair: nothing survives (confirmed by exhaustive enumeration)
    Graph p4 = path_graph(4);
    VertexSet ends{0, 3}, mids{1, 2};
    REQUIRE(find_bijections(p4, ends, p4, mids).empty());
    for (const Bijection& f : all_bijections(ends, mids))
        REQUIRE_FALSE(removal_cospectral(p4, ends, p4, mids, f));

    // deterministic lexicographic order of the image tuples
    Graph k4 = complete_graph(4);
    auto k4maps = find_bijections(k4, {1, 2, 3}, k4, {1, 2, 3});
    REQUIRE(k4maps.size() == 6);
    for (size_t i = 1; i < k4maps.size(); ++i) {
        std::vector<Vertex> prev, cur;
        for (auto& [s, t] : k4maps[i - 1].pairs) prev.push_back(t);
        for (auto& [s, t] : k4maps[i].pairs) cur.push_back(t);
        REQUIRE(prev < cur);
    }

    REQUIRE_THROWS_AS(find_bijections(k4, {0, 1}, k4, {0}), std::invalid_argument);
}

TEST_CASE("replaceable vertices") {
    Graph k4 = complete_graph(4);
    REQUIRE_FALSE(replaceable_vertices(k4, 0, k4, 2).empty());

    // non-cospectral hosts can never pass the empty-deletion check
    Catalog c8 = generate_cubic(8);
    Graph a = c8.graph(0), b = c8.graph(1);
    REQUIRE_FALSE(cospectral(a, b));
    for (Vertex u = 0; u < 8; ++u)
        for (Vertex v = 0; v < 8; ++v) REQUIRE(replaceable_vertices(a, u, b, v).empty());

    // degree mismatch: empty, not an error
    Graph paw = testutil::paw();
    REQUIRE(replaceable_vertices(paw, 2, paw, 3).empty());
}

TEST_CASE("replaceable edges") {
    Graph prism = testutil::prism();
    REQUIRE_FALSE(replaceable_edges(prism, Edge(0, 1), prism, Edge(0, 1)).empty());
    // same edge orbit (two triangle edges)
    REQUIRE_FALSE(replaceable_edges(prism, Edge(0, 1), prism, Edge(3, 4)).empty());

    // a triangle edge against a pendant edge of the paw: walk structure differs
    Graph paw = testutil::paw();
    REQUIRE(replaceable_edges(paw, Edge(0, 1), paw, Edge(2, 3)).empty());

    REQUIRE_THROWS_AS(replaceable_edges(paw, Edge(0, 3), paw, Edge(2, 3)), std::invalid_argument);
}

TEST_CASE("lemma sweeps over all self-certificates of cubic graphs up to order 8") {
    size_t vertex_certs = 0, edge_certs = 0;
    for (int order : {4, 6, 8}) {
        Catalog cat = generate_cubic(order);
        for (size_t gi = 0; gi < cat.size(); ++gi) {
            Graph g = cat.graph(gi);
            DeletionSpectra ds(g);
            for (Vertex u = 0; u < order; ++u)
                for (Vertex v = 0; v < order; ++v) {
                    DeletionSpectra ds2(g);
                    for (const auto& cert : replaceable_vertices(ds, u, ds2, v)) {
                        ++vertex_certs;
                        REQUIRE(verify_lemma1(cert));
                        REQUIRE(cospectral(cert.g1, cert.g2));
                    }
                }
            const std::vector<Edge> es = edges(g);
            for (const Edge& e1 : es)
                for (const Edge& e2 : es) {
                    DeletionSpectra ds2(g);
                    for (const auto& cert : replaceable_edges(ds, e1, ds2, e2)) {
                        ++edge_certs;
                        REQUIRE(verify_lemma2(cert));
                    }
                }
        }
    }
    REQUIRE(vertex_certs > 100);
    REQUIRE(edge_certs > 100);
}

TEST_CASE("certificate symmetry") {
    Graph prism = testutil::prism();
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = 0; v < 6; ++v) {
            auto fwd = replaceable_vertices(prism, u, prism, v);
            auto bwd = replaceable_vertices(prism, v, prism, u);
            REQUIRE(fwd.size() == bwd.size());
            for (const auto& cert : fwd) {
                Bijection inv = cert.map.inverse();
                bool found = false;
                for (const auto& c2 : bwd) found = found || c2.map == inv;
                REQUIRE(found);
            }
        }
}

TEST_CASE("certificates satisfy the truncated walk identity") {
    Catalog cat = generate_cubic(8);
    for (size_t gi = 0; gi < cat.size(); ++gi) {
        Graph g = cat.graph(gi);
        DeletionSpectra ds(g);
        for (Vertex u = 0; u < 8; ++u)
            for (Vertex v = u + 1; v < 8; ++v) {
                DeletionSpectra ds2(g);
                for (const auto& cert : replaceable_vertices(ds, u, ds2, v)) {
                    VertexSet S = neighborhood(g, u), T = neighborhood(g, v);
                    REQUIRE(walks_match(g, S, g, T, cert.map, 2 * g.order()));
                }
            }
    }
}

TEST_CASE("anchor overlap flag") {
    Graph k4 = complete_graph(4);
    auto certs = replaceable_vertices(k4, 0, k4, 1);
    REQUIRE_FALSE(certs.empty());
    REQUIRE(certs[0].anchors_overlap());

    Graph c6 = cycle_graph(6);
    auto certs2 = replaceable_vertices(c6, 0, c6, 3);
    REQUIRE_FALSE(certs2.empty());
    REQUIRE_FALSE(certs2[0].anchors_overlap());
}
