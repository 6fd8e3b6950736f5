#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/graph6.hpp"

namespace cospec {

struct CanonicalForm {
    std::string canonical_graph6;
    std::vector<Vertex> relabeling;  // original index -> canonical index
};

struct OrbitPartition {
    std::vector<std::vector<Vertex>> vertex_orbits;  // ordered by smallest member
    std::vector<std::vector<Edge>> edge_orbits;      // ordered by smallest edge
    std::vector<int> vertex_orbit_of;                // vertex -> orbit index

    int orbit_of(Vertex v) const { return vertex_orbit_of[static_cast<size_t>(v)]; }
};

struct CanonResult {
    CanonicalForm form;
    OrbitPartition orbits;
    std::vector<std::vector<Vertex>> generators;  // automorphism generators found
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Individualization-refinement search. Computes the canonical leaf (lex
// smallest graph6 over explored leaves), accumulating automorphisms from
// equal-best leaves. Pruning inside a node only uses automorphisms that fix
// the individualized path pointwise, which keeps both the canonical form and
// the generated group exact.
class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

    CanonResult run() {
        CanonResult res;
        if (n_ == 0) {
            res.form.canonical_graph6 = to_graph6(g_);
            return res;
        }
        std::vector<std::vector<Vertex>> cells(1);
        cells[0].resize(static_cast<size_t>(n_));
        std::iota(cells[0].begin(), cells[0].end(), 0);
        dfs(cells);

        res.form.canonical_graph6 = best_;
        res.form.relabeling = best_perm_;
        res.generators = generators_;
        res.orbits = orbits_from_generators();
        return res;
    }

private:
    void refine(std::vector<std::vector<Vertex>>& cells) const {
        bool again = true;
        while (again) {
            again = false;
            for (size_t si = 0; si < cells.size() && !again; ++si) {
                std::uint64_t smask = 0;
                for (Vertex v : cells[si]) smask |= std::uint64_t{1} << v;
                for (size_t di = 0; di < cells.size(); ++di) {
                    if (cells[di].size() <= 1) continue;
                    // stable sort by neighbor count into the splitter cell
                    std::vector<std::pair<int, Vertex>> keyed;
                    keyed.reserve(cells[di].size());
                    for (Vertex v : cells[di])
                        keyed.emplace_back(std::popcount(g_.row(v) & smask), v);
                    std::sort(keyed.begin(), keyed.end());
                    if (keyed.front().first == keyed.back().first) continue;
                    std::vector<std::vector<Vertex>> groups;
                    int prev_key = keyed.front().first - 1;
                    for (auto& [k, v] : keyed) {
                        if (k != prev_key) {
                            groups.emplace_back();
                            prev_key = k;
                        }
                        groups.back().push_back(v);
                    }
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(di));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(di),
                                 groups.begin(), groups.end());
                    again = true;
                    break;
                }
            }
        }
    }

    void dfs(std::vector<std::vector<Vertex>> cells) {
        refine(cells);
        size_t target = cells.size();
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            handle_leaf(cells);
            return;
        }

        std::vector<Vertex> tried;
        const std::vector<Vertex> candidates = cells[target];  // already sorted order
        for (Vertex v : candidates) {
            if (pruned_by_stabilizer(tried, v)) continue;
            tried.push_back(v);
            std::vector<std::vector<Vertex>> child;
            child.reserve(cells.size() + 1);
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<Vertex> rest;
                for (Vertex u : cells[i])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            path_.push_back(v);
            dfs(std::move(child));
            path_.pop_back();
        }
    }

    bool pruned_by_stabilizer(const std::vector<Vertex>& tried, Vertex v) {
        if (tried.empty()) return false;
        UnionFind uf(n_);
        for (const auto& gen : generators_) {
            bool fixes_path = true;
            for (Vertex w : path_)
                if (gen[static_cast<size_t>(w)] != w) {
                    fixes_path = false;
                    break;
                }
            if (!fixes_path) continue;
            for (Vertex x = 0; x < n_; ++x) uf.unite(x, gen[static_cast<size_t>(x)]);
        }
        for (Vertex u : tried)
            if (uf.find(u) == uf.find(v)) return true;
        return false;
    }

    void handle_leaf(const std::vector<std::vector<Vertex>>& cells) {
        std::vector<Vertex> perm(static_cast<size_t>(n_));
        for (size_t i = 0; i < cells.size(); ++i) perm[static_cast<size_t>(cells[i][0])] = static_cast<Vertex>(i);
        std::string s = to_graph6(permuted(g_, perm));
        if (best_.empty() || s < best_) {
            best_ = std::move(s);
            best_perm_ = std::move(perm);
            return;
        }
        if (s != best_) return;
        // equal leaves give an automorphism: best_perm^-1 . perm
        std::vector<Vertex> inv(static_cast<size_t>(n_));
        for (Vertex x = 0; x < n_; ++x) inv[static_cast<size_t>(best_perm_[static_cast<size_t>(x)])] = x;
        std::vector<Vertex> gamma(static_cast<size_t>(n_));
        bool nontrivial = false;
        for (Vertex x = 0; x < n_; ++x) {
            gamma[static_cast<size_t>(x)] = inv[static_cast<size_t>(perm[static_cast<size_t>(x)])];
            if (gamma[static_cast<size_t>(x)] != x) nontrivial = true;
        }
        if (nontrivial) generators_.push_back(std::move(gamma));
    }

    OrbitPartition orbits_from_generators() const {
        OrbitPartition out;
        UnionFind vuf(n_);
        for (const auto& gen : generators_)
            for (Vertex x = 0; x < n_; ++x) vuf.unite(x, gen[static_cast<size_t>(x)]);
        out.vertex_orbit_of.assign(static_cast<size_t>(n_), -1);
        for (Vertex x = 0; x < n_; ++x) {
            int r = vuf.find(x);
            if (out.vertex_orbit_of[static_cast<size_t>(r)] < 0) {
                out.vertex_orbit_of[static_cast<size_t>(r)] = static_cast<int>(out.vertex_orbits.size());
                out.vertex_orbits.emplace_back();
            }
            int oid = out.vertex_orbit_of[static_cast<size_t>(r)];
            out.vertex_orbit_of[static_cast<size_t>(x)] = oid;
            out.vertex_orbits[static_cast<size_t>(oid)].push_back(x);
        }

        const std::vector<Edge> es = edges(g_);
        auto edge_index = [&](const Edge& e) {
            return static_cast<int>(std::lower_bound(es.begin(), es.end(), e) - es.begin());
        };
        UnionFind euf(static_cast<int>(es.size()));
        for (const auto& gen : generators_)
            for (size_t i = 0; i < es.size(); ++i) {
                Edge img(gen[static_cast<size_t>(es[i].a)], gen[static_cast<size_t>(es[i].b)]);
                euf.unite(static_cast<int>(i), edge_index(img));
            }
        std::vector<int> eroot_to_orbit(es.size(), -1);
        for (size_t i = 0; i < es.size(); ++i) {
            int r = euf.find(static_cast<int>(i));
            if (eroot_to_orbit[static_cast<size_t>(r)] < 0) {
                eroot_to_orbit[static_cast<size_t>(r)] = static_cast<int>(out.edge_orbits.size());
                out.edge_orbits.emplace_back();
            }
            out.edge_orbits[static_cast<size_t>(eroot_to_orbit[static_cast<size_t>(r)])].push_back(es[i]);
        }
        return out;
    }

    const Graph& g_;
    int n_;
    std::string best_;
    std::vector<Vertex> best_perm_;
    std::vector<std::vector<Vertex>> generators_;
    std::vector<Vertex> path_;
};

}  // namespace detail

inline CanonResult canon_analyze(const Graph& g) { return detail::CanonSearch(g).run(); }

inline CanonicalForm canonical_form(const Graph& g) { return canon_analyze(g).form; }

inline bool are_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
    return canonical_form(g1).canonical_graph6 == canonical_form(g2).canonical_graph6;
}

// Exact orbits of the full automorphism group.
inline OrbitPartition automorphism_orbits(const Graph& g) { return canon_analyze(g).orbits; }

}  // namespace cospec
