#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cospec/bigint.hpp"
#include "cospec/bijection.hpp"
#include "cospec/graph.hpp"

namespace cospec {

// Exact i-j walk counts for every length r <= r_max: counts[r] is the n x n
// table A^r, counts[0] the identity. This is the truncated series of the
// walk generating matrix W(G,x) = sum_r A^r x^r.
struct WalkCountTable {
    int n = 0;
    int r_max = 0;
    std::vector<std::vector<Int>> counts;  // counts[r] flattened row-major

    const Int& at(int r, Vertex i, Vertex j) const {
        return counts[static_cast<size_t>(r)][static_cast<size_t>(i) * n + j];
    }
};

inline WalkCountTable walk_counts(const Graph& g, int r_max) {
    if (r_max < 0) throw std::invalid_argument("walk_counts: r_max must be >= 0");
    const int n = g.order();
    WalkCountTable t;
    t.n = n;
    t.r_max = r_max;
    t.counts.resize(static_cast<size_t>(r_max) + 1);
    t.counts[0].assign(static_cast<size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i) t.counts[0][static_cast<size_t>(i) * n + i] = 1;
    for (int r = 1; r <= r_max; ++r) {
        const auto& prev = t.counts[static_cast<size_t>(r) - 1];
        auto& cur = t.counts[static_cast<size_t>(r)];
        cur.assign(static_cast<size_t>(n) * n, Int(0));
        for (int i = 0; i < n; ++i) {
            Int* out = &cur[static_cast<size_t>(i) * n];
            std::uint64_t nb = g.row(i);
            while (nb) {
                const int u = std::countr_zero(nb);
                nb &= nb - 1;
                const Int* src = &prev[static_cast<size_t>(u) * n];
                for (int j = 0; j < n; ++j) out[j] += src[j];
            }
        }
    }
    return t;
}

// Truncated form of Godsil's walk identity: true iff the i-j walk counts in
// g1 agree with the f(i)-f(j) counts in g2 for all i,j in S and all r <= r_max.
inline bool walks_match(const Graph& g1, const VertexSet& S, const Graph& g2, const VertexSet& T,
                        const Bijection& f, int r_max) {
    require_bijection(f, S, T, "walks_match");
    const WalkCountTable t1 = walk_counts(g1, r_max);
    const WalkCountTable t2 = walk_counts(g2, r_max);
    for (int r = 0; r <= r_max; ++r)
        for (Vertex i : S)
            for (Vertex j : S)
                if (t1.at(r, i, j) != t2.at(r, f.apply(i), f.apply(j))) return false;
    return true;
}

}  // namespace cospec
