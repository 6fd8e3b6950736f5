#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

// Explicit vertex map between two small vertex subsets (the f, g, h of the
// removal-cospectrality machinery). Pairs are kept sorted by source; the map
// must be injective.
struct Bijection {
    std::vector<std::pair<Vertex, Vertex>> pairs;

    Bijection() = default;
    explicit Bijection(std::vector<std::pair<Vertex, Vertex>> p) : pairs(std::move(p)) {
        normalize();
    }

    static Bijection identity_on(const VertexSet& s) {
        Bijection b;
        for (Vertex v : s) b.pairs.emplace_back(v, v);
        b.normalize();
        return b;
    }

    size_t size() const { return pairs.size(); }

    VertexSet domain() const {
        VertexSet d;
        for (auto& [s, t] : pairs) d.push_back(s);
        return d;  // sorted by construction
    }

    VertexSet range() const {
        VertexSet r;
        for (auto& [s, t] : pairs) r.push_back(t);
        std::sort(r.begin(), r.end());
        return r;
    }

    Vertex apply(Vertex v) const {
        for (auto& [s, t] : pairs)
            if (s == v) return t;
        throw std::invalid_argument("Bijection: vertex " + std::to_string(v) + " not in domain");
    }

    Bijection inverse() const {
        Bijection b;
        for (auto& [s, t] : pairs) b.pairs.emplace_back(t, s);
        b.normalize();
        return b;
    }

    // (other . this): first this, then other.
    Bijection then(const Bijection& other) const {
        Bijection b;
        for (auto& [s, t] : pairs) b.pairs.emplace_back(s, other.apply(t));
        b.normalize();
        return b;
    }

    bool maps(const VertexSet& S, const VertexSet& T) const {
        return domain() == S && range() == T;
    }

    friend bool operator==(const Bijection&, const Bijection&) = default;

private:
    void normalize() {
        std::sort(pairs.begin(), pairs.end());
        for (size_t i = 1; i < pairs.size(); ++i)
            if (pairs[i].first == pairs[i - 1].first)
                throw std::invalid_argument("Bijection: duplicate source vertex");
        std::vector<Vertex> tgt;
        for (auto& [s, t] : pairs) tgt.push_back(t);
        std::sort(tgt.begin(), tgt.end());
        for (size_t i = 1; i < tgt.size(); ++i)
            if (tgt[i] == tgt[i - 1])
                throw std::invalid_argument("Bijection: duplicate target vertex");
    }
};

inline void require_bijection(const Bijection& f, const VertexSet& S, const VertexSet& T,
                              const char* where) {
    if (!f.maps(S, T))
        throw std::invalid_argument(std::string(where) + ": map is not a bijection S -> T");
}

}  // namespace cospec
