#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospec/bijection.hpp"
#include "cospec/graph.hpp"
#include "cospec/removal.hpp"

namespace cospec {

// One composition: delete the anchors, stitch the left remainder onto the
// right one through the given bijection.
struct CompositionSpec {
    enum class Kind { vertex, edge };

    Kind kind = Kind::vertex;
    Graph left, right;
    Vertex u = -1, v = -1;        // vertex anchors
    std::optional<Edge> e1, e2;   // edge anchors
    Bijection stitch;             // N(u) -> N(v), or endpoints -> endpoints
};

// (G o H): vertex set (G \ u) + (H \ v), all surviving edges, plus the k
// stitch edges. Left-remainder vertices come first (compacted), then the
// right remainder, so outputs are exact values tests can assert on.
inline Graph vertex_composition(const CompositionSpec& spec) {
    if (spec.kind != CompositionSpec::Kind::vertex)
        throw std::invalid_argument("vertex_composition: spec kind is not vertex");
    const Graph& G = spec.left;
    const Graph& H = spec.right;
    const VertexSet Nu = neighborhood(G, spec.u);
    const VertexSet Nv = neighborhood(H, spec.v);
    if (Nu.size() != Nv.size())
        throw std::invalid_argument("vertex_composition: anchor degrees differ (" +
                                    std::to_string(Nu.size()) + " vs " + std::to_string(Nv.size()) +
                                    ")");
    require_bijection(spec.stitch, Nu, Nv, "vertex_composition");

    const int gn = G.order(), hn = H.order();
    auto lidx = [&](Vertex x) { return x - (x > spec.u ? 1 : 0); };
    auto ridx = [&](Vertex y) { return gn - 1 + y - (y > spec.v ? 1 : 0); };

    Graph out(gn + hn - 2);
    for (const Edge& e : edges(G))
        if (e.a != spec.u && e.b != spec.u) out.add_edge(lidx(e.a), lidx(e.b));
    for (const Edge& e : edges(H))
        if (e.a != spec.v && e.b != spec.v) out.add_edge(ridx(e.a), ridx(e.b));
    for (Vertex x : Nu) out.add_edge(lidx(x), ridx(spec.stitch.apply(x)));
    return out;
}

// (G <> H): vertex set V(G) + V(H), the anchor edges removed, plus the two
// stitch edges between their endpoint pairs.
inline Graph edge_composition(const CompositionSpec& spec) {
    if (spec.kind != CompositionSpec::Kind::edge)
        throw std::invalid_argument("edge_composition: spec kind is not edge");
    if (!spec.e1 || !spec.e2) throw std::invalid_argument("edge_composition: missing anchors");
    const Graph& G = spec.left;
    const Graph& H = spec.right;
    if (!G.has_edge(spec.e1->a, spec.e1->b))
        throw std::invalid_argument("edge_composition: e1 not present in left graph");
    if (!H.has_edge(spec.e2->a, spec.e2->b))
        throw std::invalid_argument("edge_composition: e2 not present in right graph");
    const VertexSet S{spec.e1->a, spec.e1->b};
    const VertexSet T{spec.e2->a, spec.e2->b};
    require_bijection(spec.stitch, S, T, "edge_composition");

    const int gn = G.order();
    Graph out(gn + H.order());
    for (const Edge& e : edges(G))
        if (!(e == *spec.e1)) out.add_edge(e.a, e.b);
    for (const Edge& e : edges(H))
        if (!(e == *spec.e2)) out.add_edge(gn + e.a, gn + e.b);
    for (Vertex x : S) out.add_edge(x, gn + spec.stitch.apply(x));
    return out;
}

// The two-family batch construction. Left graphs carry maps g_i1 onto the
// first left anchor's neighborhood, right graphs carry maps h_1j from the
// first right anchor's neighborhood; the seed joins the two first anchors.
// The (i, j) composition stitches with h_1j . f . g_i1, which is what keeps
// all m*n outputs cospectral.
struct FamilyConstructionPlan {
    using Kind = CompositionSpec::Kind;

    Kind kind = Kind::vertex;
    std::vector<Graph> left;
    std::vector<Vertex> left_anchors;        // vertex kind
    std::vector<Edge> left_edge_anchors;     // edge kind
    std::vector<Bijection> left_maps_to_first;
    std::vector<Graph> right;
    std::vector<Vertex> right_anchors;
    std::vector<Edge> right_edge_anchors;
    std::vector<Bijection> right_maps_from_first;
    Bijection seed;
};

namespace detail {

inline VertexSet plan_anchor_set(const FamilyConstructionPlan& p, bool left_side, size_t i) {
    if (p.kind == FamilyConstructionPlan::Kind::vertex) {
        const Graph& g = left_side ? p.left[i] : p.right[i];
        const Vertex a = left_side ? p.left_anchors[i] : p.right_anchors[i];
        return neighborhood(g, a);
    }
    const Edge& e = left_side ? p.left_edge_anchors[i] : p.right_edge_anchors[i];
    return VertexSet{e.a, e.b};
}

inline void validate_family_plan(const FamilyConstructionPlan& p) {
    const size_t m = p.left.size(), n = p.right.size();
    const bool vertex_kind = p.kind == FamilyConstructionPlan::Kind::vertex;
    if (m == 0 || n == 0) throw std::invalid_argument("family plan: empty family");
    if (vertex_kind && (p.left_anchors.size() != m || p.right_anchors.size() != n))
        throw std::invalid_argument("family plan: anchor count mismatch");
    if (!vertex_kind && (p.left_edge_anchors.size() != m || p.right_edge_anchors.size() != n))
        throw std::invalid_argument("family plan: anchor count mismatch");
    if (p.left_maps_to_first.size() != m || p.right_maps_from_first.size() != n)
        throw std::invalid_argument("family plan: map count mismatch");

    // the maps must connect each anchor set to the first one, and beyond a
    // one-member family they must be certified replaceable maps
    for (size_t i = 0; i < m; ++i) {
        const VertexSet Si = plan_anchor_set(p, true, i);
        const VertexSet S1 = plan_anchor_set(p, true, 0);
        if (!p.left_maps_to_first[i].maps(Si, S1))
            throw std::invalid_argument("family plan: left map " + std::to_string(i) +
                                        " has inconsistent domain/range");
        if (m > 1 && !removal_cospectral(p.left[i], Si, p.left[0], S1, p.left_maps_to_first[i]))
            throw std::invalid_argument("family plan: left map " + std::to_string(i) +
                                        " is not a certified replaceable map");
    }
    for (size_t j = 0; j < n; ++j) {
        const VertexSet T1 = plan_anchor_set(p, false, 0);
        const VertexSet Tj = plan_anchor_set(p, false, j);
        if (!p.right_maps_from_first[j].maps(T1, Tj))
            throw std::invalid_argument("family plan: right map " + std::to_string(j) +
                                        " has inconsistent domain/range");
        if (n > 1 && !removal_cospectral(p.right[0], T1, p.right[j], Tj, p.right_maps_from_first[j]))
            throw std::invalid_argument("family plan: right map " + std::to_string(j) +
                                        " is not a certified replaceable map");
    }
    if (!p.seed.maps(plan_anchor_set(p, true, 0), plan_anchor_set(p, false, 0)))
        throw std::invalid_argument("family plan: seed does not join the first anchors");
}

}  // namespace detail

// All m*n compositions (G_i o H_j) with stitch h_1j . f . g_i1, in row-major
// (i, j) order.
inline std::vector<Graph> batch_vertex_construction(const FamilyConstructionPlan& p) {
    if (p.kind != FamilyConstructionPlan::Kind::vertex)
        throw std::invalid_argument("batch_vertex_construction: plan kind is not vertex");
    detail::validate_family_plan(p);
    std::vector<Graph> out;
    out.reserve(p.left.size() * p.right.size());
    for (size_t i = 0; i < p.left.size(); ++i)
        for (size_t j = 0; j < p.right.size(); ++j) {
            CompositionSpec spec;
            spec.kind = CompositionSpec::Kind::vertex;
            spec.left = p.left[i];
            spec.right = p.right[j];
            spec.u = p.left_anchors[i];
            spec.v = p.right_anchors[j];
            spec.stitch = p.left_maps_to_first[i].then(p.seed).then(p.right_maps_from_first[j]);
            out.push_back(vertex_composition(spec));
        }
    return out;
}

inline std::vector<Graph> batch_edge_construction(const FamilyConstructionPlan& p) {
    if (p.kind != FamilyConstructionPlan::Kind::edge)
        throw std::invalid_argument("batch_edge_construction: plan kind is not edge");
    detail::validate_family_plan(p);
    std::vector<Graph> out;
    out.reserve(p.left.size() * p.right.size());
    for (size_t i = 0; i < p.left.size(); ++i)
        for (size_t j = 0; j < p.right.size(); ++j) {
            CompositionSpec spec;
            spec.kind = CompositionSpec::Kind::edge;
            spec.left = p.left[i];
            spec.right = p.right[j];
            spec.e1 = p.left_edge_anchors[i];
            spec.e2 = p.right_edge_anchors[j];
            spec.stitch = p.left_maps_to_first[i].then(p.seed).then(p.right_maps_from_first[j]);
            out.push_back(edge_composition(spec));
        }
    return out;
}

}  // namespace cospec
