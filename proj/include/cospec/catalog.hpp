#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cospec/canon.hpp"
#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"

namespace cospec {

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Isomorph-free list of connected cubic graphs of one order. Members are
// canonical graph6 strings.
struct Catalog {
    enum class Source { generated, ingested };

    int order = 0;
    std::vector<std::string> members;
    Source source = Source::generated;
    std::string source_path;

    size_t size() const { return members.size(); }
    Graph graph(size_t i) const { return from_graph6(members[i]); }
    bool contains(const std::string& canonical_g6) const {
        for (const auto& m : members)
            if (m == canonical_g6) return true;
        return false;
    }
};

namespace detail {

// Isomorph-free growth of connected subcubic states. Each state is the
// canonical form of a connected graph with max degree <= 3; expansion adds
// one edge at a deterministically chosen unsaturated vertex, either to
// another unsaturated vertex or to a fresh vertex while the budget lasts.
// Deduplicating states by canonical form keeps each isomorphism class alive
// exactly once; any completion of a pruned copy is a completion of the kept
// representative.
inline std::vector<std::string> grow_connected_cubic(int n) {
    std::vector<std::string> finals;
    if (n < 4) return finals;

    Graph k2 = complete_graph(2);
    const std::string start = canonical_form(k2).canonical_graph6;

    std::unordered_set<std::string> visited{start};
    std::unordered_set<std::string> done;
    std::vector<std::string> stack{start};

    while (!stack.empty()) {
        const std::string key = std::move(stack.back());
        stack.pop_back();
        const Graph g = from_graph6(key);
        const int v_count = g.order();

        // chosen vertex: highest degree among unsaturated, smallest canonical
        // index breaking ties
        Vertex grow = -1;
        for (Vertex v = 0; v < v_count; ++v) {
            const int d = g.degree(v);
            if (d >= 3) continue;
            if (grow < 0 || d > g.degree(grow)) grow = v;
        }
        if (grow < 0) continue;  // fully saturated state, handled at creation

        auto consider = [&](Graph h) {
            // saturation check on the component of the new edge
            bool all_sat = true;
            for (Vertex v = 0; v < h.order(); ++v)
                if (h.degree(v) != 3) {
                    all_sat = false;
                    break;
                }
            if (all_sat) {
                if (h.order() == n && is_connected(h)) {
                    std::string c = canonical_form(h).canonical_graph6;
                    if (done.insert(c).second) finals.push_back(c);
                }
                return;  // saturated states never extend
            }
            // a saturated proper component can never reconnect
            // (components other than the growth component are untouched, and
            //  growth keeps the state connected, so no check needed here)
            std::string c = canonical_form(h).canonical_graph6;
            if (visited.insert(c).second) stack.push_back(c);
        };

        for (Vertex u = 0; u < v_count; ++u) {
            if (u == grow || g.degree(u) >= 3 || g.has_edge(grow, u)) continue;
            Graph h = g;
            h.add_edge(grow, u);
            consider(std::move(h));
        }
        if (v_count < n) {
            Graph h(v_count + 1);
            for (Vertex a = 0; a < v_count; ++a)
                for (Vertex b : neighborhood(g, a))
                    if (a < b) h.add_edge(a, b);
            h.add_edge(grow, v_count);
            consider(std::move(h));
        }
    }
    std::sort(finals.begin(), finals.end());
    return finals;
}

}  // namespace detail

// Exhaustive isomorph-free generation of connected cubic graphs. Guaranteed
// envelope is 4 <= N <= 14; larger orders must be ingested from files.
inline Catalog generate_cubic(int N) {
    if (N % 2 != 0) throw CatalogError("generate_cubic: cubic graphs need even order");
    if (N < 4 || N > 14)
        throw CatalogError("generate_cubic: order " + std::to_string(N) +
                           " outside the supported envelope [4, 14]");
    Catalog c;
    c.order = N;
    c.source = Catalog::Source::generated;
    c.members = detail::grow_connected_cubic(N);
    return c;
}

// Validating ingestion of a graph6 line file. Failures are fatal and name
// the offending line (1-based).
inline Catalog ingest_catalog(const std::string& path, int N) {
    Catalog c;
    c.order = N;
    c.source = Catalog::Source::ingested;
    c.source_path = path;

    const std::vector<std::string> lines = read_graph6_lines(path);
    std::unordered_map<std::string, size_t> seen;  // canonical -> first line
    for (size_t i = 0; i < lines.size(); ++i) {
        const std::string where = "line " + std::to_string(i + 1);
        Graph g;
        try {
            g = from_graph6(lines[i]);
        } catch (const Graph6Error& e) {
            throw CatalogError(path + " " + where + ": " + e.what());
        }
        if (g.order() != N)
            throw CatalogError(path + " " + where + ": order " + std::to_string(g.order()) +
                               ", expected " + std::to_string(N));
        if (!is_k_regular(g, 3))
            throw CatalogError(path + " " + where + ": graph is not 3-regular");
        if (!is_connected(g)) throw CatalogError(path + " " + where + ": graph is not connected");
        std::string canon = canonical_form(g).canonical_graph6;
        auto [it, fresh] = seen.emplace(canon, i + 1);
        if (!fresh)
            throw CatalogError(path + " " + where + ": isomorphic to line " +
                               std::to_string(it->second));
        c.members.push_back(std::move(canon));
    }
    return c;
}

}  // namespace cospec
