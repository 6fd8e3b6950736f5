#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospec/bijection.hpp"
#include "cospec/charpoly.hpp"
#include "cospec/graph.hpp"

namespace cospec {

// Lazy memo of whole/one/two-vertex-deleted characteristic polynomials of a
// fixed graph. Purely an optimization: every value equals a fresh
// char_poly(delete_vertices(...)) call.
class DeletionSpectra {
public:
    explicit DeletionSpectra(Graph g) : g_(std::move(g)) {
        const size_t n = static_cast<size_t>(g_.order());
        singles_.resize(n);
        pairs_.resize(n * n);
    }

    const Graph& graph() const { return g_; }

    const CharPoly& whole() {
        if (!whole_) whole_ = char_poly(g_);
        return *whole_;
    }

    const CharPoly& minus(Vertex i) {
        auto& slot = singles_[static_cast<size_t>(i)];
        if (!slot) slot = char_poly(delete_vertices(g_, {i}));
        return *slot;
    }

    const CharPoly& minus_pair(Vertex i, Vertex j) {
        if (i > j) std::swap(i, j);
        auto& slot = pairs_[static_cast<size_t>(i) * g_.order() + j];
        if (!slot) slot = char_poly(delete_vertices(g_, {i, j}));
        return *slot;
    }

private:
    Graph g_;
    std::optional<CharPoly> whole_;
    std::vector<std::optional<CharPoly>> singles_;
    std::vector<std::optional<CharPoly>> pairs_;
};

// Godsil's reduction of the removal-cospectrality definition: check only the
// deletions X with |X| <= 2 (empty set, singletons, unordered pairs).
inline bool removal_cospectral(DeletionSpectra& a, const VertexSet& S, DeletionSpectra& b,
                               const VertexSet& T, const Bijection& f) {
    require_bijection(f, S, T, "removal_cospectral");
    if (a.whole() != b.whole()) return false;
    for (Vertex i : S)
        if (a.minus(i) != b.minus(f.apply(i))) return false;
    for (size_t x = 0; x < S.size(); ++x)
        for (size_t y = x + 1; y < S.size(); ++y)
            if (a.minus_pair(S[x], S[y]) != b.minus_pair(f.apply(S[x]), f.apply(S[y])))
                return false;
    return true;
}

inline bool removal_cospectral(const Graph& g1, const VertexSet& S, const Graph& g2,
                               const VertexSet& T, const Bijection& f) {
    DeletionSpectra a(g1), b(g2);
    return removal_cospectral(a, S, b, T, f);
}

// The unreduced definition, quantifying over every subset of S. Test oracle;
// exponential, so capped at |S| <= 12.
inline bool removal_cospectral_full(const Graph& g1, const VertexSet& S, const Graph& g2,
                                    const VertexSet& T, const Bijection& f) {
    require_bijection(f, S, T, "removal_cospectral_full");
    if (S.size() > 12)
        throw std::invalid_argument("removal_cospectral_full: |S| > 12 refused");
    const std::uint32_t subsets = std::uint32_t{1} << S.size();
    for (std::uint32_t m = 0; m < subsets; ++m) {
        VertexSet X, Y;
        for (size_t k = 0; k < S.size(); ++k)
            if ((m >> k) & 1u) {
                X.push_back(S[k]);
                Y.push_back(f.apply(S[k]));
            }
        std::sort(Y.begin(), Y.end());
        if (char_poly(delete_vertices(g1, X)) != char_poly(delete_vertices(g2, Y))) return false;
    }
    return true;
}

// All bijections S -> T that make (S, T) removal cospectral, in lexicographic
// order of the image tuple. Candidate targets are prefiltered by the
// single-deletion polynomial before pair checks run.
inline std::vector<Bijection> find_bijections(DeletionSpectra& a, const VertexSet& S,
                                              DeletionSpectra& b, const VertexSet& T) {
    if (S.size() != T.size())
        throw std::invalid_argument("find_bijections: |S| != |T|");
    if (S.size() > 8) throw std::invalid_argument("find_bijections: |S| > 8 refused");
    std::vector<Bijection> out;
    if (a.whole() != b.whole()) return out;

    const size_t k = S.size();
    std::vector<std::vector<Vertex>> candidates(k);
    for (size_t i = 0; i < k; ++i) {
        for (Vertex t : T)
            if (a.minus(S[i]) == b.minus(t)) candidates[i].push_back(t);
        if (candidates[i].empty()) return out;
    }

    std::vector<Vertex> image(k, -1);
    std::vector<bool> used_target(static_cast<size_t>(b.graph().order()), false);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == k) {
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (size_t j = 0; j < k; ++j) pairs.emplace_back(S[j], image[j]);
            out.emplace_back(std::move(pairs));
            return;
        }
        for (Vertex t : candidates[i]) {
            if (used_target[static_cast<size_t>(t)]) continue;
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j)
                ok = a.minus_pair(S[i], S[j]) == b.minus_pair(t, image[j]);
            if (!ok) continue;
            image[i] = t;
            used_target[static_cast<size_t>(t)] = true;
            self(self, i + 1);
            used_target[static_cast<size_t>(t)] = false;
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<Bijection> find_bijections(const Graph& g1, const VertexSet& S, const Graph& g2,
                                              const VertexSet& T) {
    DeletionSpectra a(g1), b(g2);
    return find_bijections(a, S, b, T);
}

// A verified replaceability witness: anchors plus the neighborhood (or
// endpoint) bijection, with the participating graphs kept alongside so the
// certificate is self contained.
struct ReplaceableCertificate {
    enum class Kind { vertex, edge };

    Kind kind;
    Graph g1, g2;
    Vertex u = -1, v = -1;              // vertex anchors
    std::optional<Edge> e1, e2;         // edge anchors
    Bijection map;

    // Anchors that touch inside a single graph; reported but not treated
    // specially by the criterion itself.
    bool anchors_overlap() const {
        if (!(g1 == g2)) return false;
        if (kind == Kind::vertex) {
            if (u == v || g1.has_edge(u, v)) return true;
            VertexSet nu = neighborhood(g1, u), nv = neighborhood(g1, v);
            VertexSet inter;
            std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                                  std::back_inserter(inter));
            return !inter.empty();
        }
        return e1->a == e2->a || e1->a == e2->b || e1->b == e2->a || e1->b == e2->b;
    }
};

// Definition of replaceable vertices: N(u) and N(v) removal cospectral. The
// deletions never include u or v themselves. Degree mismatch yields the
// empty list rather than an error.
inline std::vector<ReplaceableCertificate> replaceable_vertices(DeletionSpectra& a, Vertex u,
                                                                DeletionSpectra& b, Vertex v) {
    std::vector<ReplaceableCertificate> out;
    const VertexSet S = neighborhood(a.graph(), u);
    const VertexSet T = neighborhood(b.graph(), v);
    if (S.size() != T.size()) return out;
    for (Bijection& f : find_bijections(a, S, b, T)) {
        ReplaceableCertificate cert;
        cert.kind = ReplaceableCertificate::Kind::vertex;
        cert.g1 = a.graph();
        cert.g2 = b.graph();
        cert.u = u;
        cert.v = v;
        cert.map = std::move(f);
        out.push_back(std::move(cert));
    }
    return out;
}

inline std::vector<ReplaceableCertificate> replaceable_vertices(const Graph& g1, Vertex u,
                                                                const Graph& g2, Vertex v) {
    DeletionSpectra a(g1), b(g2);
    return replaceable_vertices(a, u, b, v);
}

// Definition of replaceable edges: the two incident-vertex pairs removal
// cospectral (at most two bijections to try).
inline std::vector<ReplaceableCertificate> replaceable_edges(DeletionSpectra& a, const Edge& e1,
                                                             DeletionSpectra& b, const Edge& e2) {
    if (!a.graph().has_edge(e1.a, e1.b))
        throw std::invalid_argument("replaceable_edges: e1 not present in g1");
    if (!b.graph().has_edge(e2.a, e2.b))
        throw std::invalid_argument("replaceable_edges: e2 not present in g2");
    std::vector<ReplaceableCertificate> out;
    for (Bijection& f : find_bijections(a, {e1.a, e1.b}, b, {e2.a, e2.b})) {
        ReplaceableCertificate cert;
        cert.kind = ReplaceableCertificate::Kind::edge;
        cert.g1 = a.graph();
        cert.g2 = b.graph();
        cert.e1 = e1;
        cert.e2 = e2;
        cert.map = std::move(f);
        out.push_back(std::move(cert));
    }
    return out;
}

inline std::vector<ReplaceableCertificate> replaceable_edges(const Graph& g1, const Edge& e1,
                                                             const Graph& g2, const Edge& e2) {
    DeletionSpectra a(g1), b(g2);
    return replaceable_edges(a, e1, b, e2);
}

// Replaceable vertices stay removal cospectral when the anchors join their
// own neighborhoods, mapped to each other. Must hold for every certificate;
// false signals an implementation bug.
inline bool verify_lemma1(const ReplaceableCertificate& cert) {
    if (cert.kind != ReplaceableCertificate::Kind::vertex)
        throw std::invalid_argument("verify_lemma1: vertex certificate required");
    VertexSet S = neighborhood(cert.g1, cert.u);
    S.insert(std::lower_bound(S.begin(), S.end(), cert.u), cert.u);
    VertexSet T = neighborhood(cert.g2, cert.v);
    T.insert(std::lower_bound(T.begin(), T.end(), cert.v), cert.v);
    Bijection f = cert.map;
    f.pairs.emplace_back(cert.u, cert.v);
    f = Bijection(std::move(f.pairs));
    return removal_cospectral(cert.g1, S, cert.g2, T, f);
}

// Replaceable edge endpoints stay removal cospectral after the anchor edges
// are deleted (which also forces the edge-deleted graphs to be cospectral).
inline bool verify_lemma2(const ReplaceableCertificate& cert) {
    if (cert.kind != ReplaceableCertificate::Kind::edge)
        throw std::invalid_argument("verify_lemma2: edge certificate required");
    const Graph h1 = delete_edge(cert.g1, *cert.e1);
    const Graph h2 = delete_edge(cert.g2, *cert.e2);
    return removal_cospectral(h1, {cert.e1->a, cert.e1->b}, h2, {cert.e2->a, cert.e2->b},
                              cert.map);
}

}  // namespace cospec
