#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cospec {

using Vertex = int;

// Sorted set of distinct vertex indices.
using VertexSet = std::vector<Vertex>;

// Unordered pair of distinct endpoints, stored normalized (a < b).
struct Edge {
    Vertex a;
    Vertex b;

    Edge(Vertex u, Vertex v) : a(std::min(u, v)), b(std::max(u, v)) {
        if (u == v) throw std::invalid_argument("Edge: endpoints must be distinct");
    }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Adjacency rows are 64-bit
// masks, which caps the order at 62 (the graph6 short-form limit).
// Values are treated as immutable once built; all operations below are pure.
class Graph {
public:
    static constexpr int kMaxOrder = 62;

    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {
        if (n < 0 || n > kMaxOrder)
            throw std::invalid_argument("Graph: order must be in [0, 62], got " + std::to_string(n));
    }

    int order() const { return n_; }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && (rows_[u] >> v) & 1u;
    }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: no loops");
        rows_[u] |= std::uint64_t{1} << v;
        rows_[v] |= std::uint64_t{1} << u;
    }

    void remove_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        rows_[u] &= ~(std::uint64_t{1} << v);
        rows_[v] &= ~(std::uint64_t{1} << u);
    }

    // Neighbor set of v as a bitmask.
    std::uint64_t row(Vertex v) const {
        check_vertex(v);
        return rows_[v];
    }

    int degree(Vertex v) const { return std::popcount(row(v)); }

    int edge_count() const {
        int s = 0;
        for (Vertex v = 0; v < n_; ++v) s += std::popcount(rows_[v]);
        return s / 2;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                                    " out of range for order " + std::to_string(n_));
    }

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

inline VertexSet neighborhood(const Graph& g, Vertex v) {
    VertexSet out;
    std::uint64_t m = g.row(v);
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline std::vector<Edge> edges(const Graph& g) {
    std::vector<Edge> out;
    for (Vertex u = 0; u < g.order(); ++u) {
        std::uint64_t m = g.row(u) >> (u + 1) << (u + 1);
        while (m) {
            out.emplace_back(u, std::countr_zero(m));
            m &= m - 1;
        }
    }
    return out;
}

// G \ X with the survivors reindexed by order-preserving compaction.
// The result may be disconnected or empty.
inline Graph delete_vertices(const Graph& g, const VertexSet& X) {
    std::uint64_t kill = 0;
    for (Vertex v : X) {
        if (v < 0 || v >= g.order())
            throw std::out_of_range("delete_vertices: vertex " + std::to_string(v) + " out of range");
        kill |= std::uint64_t{1} << v;
    }
    std::vector<Vertex> newidx(static_cast<size_t>(g.order()), -1);
    int m = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!((kill >> v) & 1u)) newidx[v] = m++;
    Graph h(m);
    for (Vertex u = 0; u < g.order(); ++u) {
        if (newidx[u] < 0) continue;
        std::uint64_t r = g.row(u) & ~kill;
        while (r) {
            Vertex v = std::countr_zero(r);
            r &= r - 1;
            if (u < v) h.add_edge(newidx[u], newidx[v]);
        }
    }
    return h;
}

inline Graph delete_vertex(const Graph& g, Vertex v) { return delete_vertices(g, {v}); }

inline Graph delete_edge(const Graph& g, const Edge& e) {
    if (!g.has_edge(e.a, e.b))
        throw std::invalid_argument("delete_edge: edge (" + std::to_string(e.a) + "," +
                                    std::to_string(e.b) + ") not present");
    Graph h = g;
    h.remove_edge(e.a, e.b);
    return h;
}

// The empty graph counts as not connected.
inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            Vertex v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.row(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == g.order();
}

inline bool is_k_regular(const Graph& g, int k) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

inline Graph permuted(const Graph& g, const std::vector<Vertex>& perm) {
    Graph h(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        std::uint64_t r = g.row(u) >> (u + 1) << (u + 1);
        while (r) {
            Vertex v = std::countr_zero(r);
            r &= r - 1;
            h.add_edge(perm[u], perm[v]);
        }
    }
    return h;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

}  // namespace cospec
