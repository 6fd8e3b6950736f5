#pragma once

#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cospec/canon.hpp"
#include "cospec/catalog.hpp"
#include "cospec/charpoly.hpp"
#include "cospec/compose.hpp"
#include "cospec/removal.hpp"

namespace cospec {

struct CospectralClass {
    CharPoly fingerprint;
    std::vector<size_t> members;  // catalog indices
};

struct SurveyOptions {
    int jobs = 1;
    // Strict reading of the mate census: the mate must be a non-isomorphic
    // cospectral catalog member. The loose reading also accepts a graph's own
    // cross-orbit certificates.
    bool strict_mate_semantics = true;
    // Strict reading of the constructed census: an instance only counts when
    // it certifies two non-isomorphic cospectral outputs. The loose reading
    // counts every composition output.
    bool strict_constructed_semantics = true;
    // Anchor enumeration cut down to orbit representatives. Disabling it is
    // an oracle mode; the results must not change.
    bool symmetry_reduction = true;
};

struct GraphFlags {
    bool rep_edge_self = false;
    bool rep_vertex_self = false;
    bool rep_edge_mate = false;
    bool rep_vertex_mate = false;
    bool nus3 = false;
    bool nus3c = false;
    bool constructed = false;
};

struct SurveyReport {
    int order = 0;
    size_t total = 0;
    size_t rep_edge_self = 0;
    size_t rep_vertex_self = 0;
    size_t nus3_count = 0;
    size_t rep_edge_mate = 0;
    size_t rep_vertex_mate = 0;
    size_t nus3c_count = 0;
    bool constructed_computed = false;
    size_t constructed_count = 0;
};

struct SurveyData {
    SurveyReport report;
    std::vector<GraphFlags> flags;
    std::vector<CospectralClass> classes;
    // certificates discovered along the way, in deterministic catalog order
    std::vector<ReplaceableCertificate> self_vertex_certs;
    std::vector<ReplaceableCertificate> self_edge_certs;
    std::vector<ReplaceableCertificate> mate_vertex_certs;
    std::vector<ReplaceableCertificate> mate_edge_certs;
    std::set<std::string> constructed_forms;
};

namespace detail {

template <class Fn>
void parallel_for(size_t count, int jobs, Fn&& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

inline std::vector<Bijection> all_bijections(const VertexSet& S, const VertexSet& T) {
    std::vector<Bijection> out;
    VertexSet img = T;
    do {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (size_t i = 0; i < S.size(); ++i) pairs.emplace_back(S[i], img[i]);
        out.emplace_back(std::move(pairs));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace detail

// Classes keyed by exact characteristic polynomial, ordered by the
// fingerprint serialization.
inline std::vector<CospectralClass> partition_cospectral(const Catalog& c) {
    std::map<std::string, CospectralClass> by_key;
    for (size_t i = 0; i < c.size(); ++i) {
        CharPoly p = char_poly(c.graph(i));
        auto [it, fresh] = by_key.try_emplace(p.serialize_key());
        if (fresh) it->second.fingerprint = std::move(p);
        it->second.members.push_back(i);
    }
    std::vector<CospectralClass> out;
    out.reserve(by_key.size());
    for (auto& [key, cls] : by_key) out.push_back(std::move(cls));
    return out;
}

// Union of all classes of size >= 2: the graphs with a non-unique spectrum.
inline std::vector<size_t> nus3(const std::vector<CospectralClass>& classes) {
    std::vector<size_t> out;
    for (const auto& cls : classes)
        if (cls.members.size() >= 2)
            out.insert(out.end(), cls.members.begin(), cls.members.end());
    std::sort(out.begin(), out.end());
    return out;
}

// True iff some edge cut of size <= 3 splits the graph into components that
// all contain a cycle (a component has a cycle iff it has at least as many
// edges as vertices). For connected cubic graphs this is exactly cyclic edge
// connectivity <= 3.
inline bool cyclic_edge_conn_le3(const Graph& g) {
    const std::vector<Edge> es = edges(g);
    const size_t m = es.size();
    const int n = g.order();

    auto cut_works = [&](const std::vector<size_t>& cut) {
        Graph h = g;
        for (size_t idx : cut) h.remove_edge(es[idx].a, es[idx].b);
        std::uint64_t unseen = (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
        int components = 0;
        while (unseen) {
            const Vertex start = std::countr_zero(unseen);
            std::uint64_t comp = std::uint64_t{1} << start;
            std::uint64_t frontier = comp;
            while (frontier) {
                std::uint64_t next = 0;
                while (frontier) {
                    Vertex v = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    next |= h.row(v);
                }
                frontier = next & ~comp;
                comp |= next;
            }
            int cv = std::popcount(comp);
            int ce = 0;
            std::uint64_t rest = comp;
            while (rest) {
                Vertex v = std::countr_zero(rest);
                rest &= rest - 1;
                ce += std::popcount(h.row(v) & comp);
            }
            ce /= 2;
            if (ce < cv) return false;  // a tree component: not cycle separating
            ++components;
            unseen &= ~comp;
        }
        return components >= 2;
    };

    for (size_t a = 0; a < m; ++a) {
        if (cut_works({a})) return true;
        for (size_t b = a + 1; b < m; ++b) {
            if (cut_works({a, b})) return true;
            for (size_t c = b + 1; c < m; ++c)
                if (cut_works({a, b, c})) return true;
        }
    }
    return false;
}

namespace detail {

struct SelfCensusRow {
    bool rep_vertex = false;
    bool rep_edge = false;
    std::vector<ReplaceableCertificate> vertex_certs;
    std::vector<ReplaceableCertificate> edge_certs;
};

// Certificates between anchors from different orbits of one graph. With
// symmetry reduction only orbit representatives are tried, which changes
// nothing: automorphisms transport certificates between same-orbit anchors.
inline SelfCensusRow self_census_graph(const Graph& g, const OrbitPartition& orbits,
                                       bool symmetry_reduction) {
    SelfCensusRow row;
    DeletionSpectra ds1(g), ds2(g);

    std::vector<std::pair<Vertex, Vertex>> vertex_pairs;
    if (symmetry_reduction) {
        for (size_t a = 0; a < orbits.vertex_orbits.size(); ++a)
            for (size_t b = a + 1; b < orbits.vertex_orbits.size(); ++b)
                vertex_pairs.emplace_back(orbits.vertex_orbits[a][0], orbits.vertex_orbits[b][0]);
    } else {
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (orbits.orbit_of(u) != orbits.orbit_of(v)) vertex_pairs.emplace_back(u, v);
    }
    for (auto [u, v] : vertex_pairs)
        for (auto& cert : replaceable_vertices(ds1, u, ds2, v)) {
            row.rep_vertex = true;
            row.vertex_certs.push_back(std::move(cert));
        }

    auto edge_orbit_of = [&](const Edge& e) {
        for (size_t i = 0; i < orbits.edge_orbits.size(); ++i)
            for (const Edge& f : orbits.edge_orbits[i])
                if (f == e) return i;
        throw std::logic_error("edge not found in orbit partition");
    };
    std::vector<std::pair<Edge, Edge>> edge_pairs;
    if (symmetry_reduction) {
        for (size_t a = 0; a < orbits.edge_orbits.size(); ++a)
            for (size_t b = a + 1; b < orbits.edge_orbits.size(); ++b)
                edge_pairs.emplace_back(orbits.edge_orbits[a][0], orbits.edge_orbits[b][0]);
    } else {
        const std::vector<Edge> es = edges(g);
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j)
                if (edge_orbit_of(es[i]) != edge_orbit_of(es[j]))
                    edge_pairs.emplace_back(es[i], es[j]);
    }
    for (auto& [e1, e2] : edge_pairs)
        for (auto& cert : replaceable_edges(ds1, e1, ds2, e2)) {
            row.rep_edge = true;
            row.edge_certs.push_back(std::move(cert));
        }
    return row;
}

struct MateCensusRow {
    bool rep_vertex = false;
    bool rep_edge = false;
    std::vector<ReplaceableCertificate> vertex_certs;  // this graph as left side
    std::vector<ReplaceableCertificate> edge_certs;
};

// Certificates between a graph and a non-isomorphic cospectral catalog mate.
inline MateCensusRow mate_census_graph(const Catalog& c, size_t gi,
                                       const std::vector<size_t>& classmates,
                                       bool symmetry_reduction) {
    MateCensusRow row;
    const Graph g = c.graph(gi);
    const OrbitPartition orb = automorphism_orbits(g);
    DeletionSpectra ds1(g);
    for (size_t gj : classmates) {
        if (gj == gi) continue;
        const Graph h = c.graph(gj);
        const OrbitPartition orb2 = automorphism_orbits(h);
        DeletionSpectra ds2(h);

        std::vector<Vertex> us, vs;
        if (symmetry_reduction) {
            for (const auto& o : orb.vertex_orbits) us.push_back(o[0]);
            for (const auto& o : orb2.vertex_orbits) vs.push_back(o[0]);
        } else {
            for (Vertex u = 0; u < g.order(); ++u) us.push_back(u);
            for (Vertex v = 0; v < h.order(); ++v) vs.push_back(v);
        }
        for (Vertex u : us)
            for (Vertex v : vs)
                for (auto& cert : replaceable_vertices(ds1, u, ds2, v)) {
                    row.rep_vertex = true;
                    row.vertex_certs.push_back(std::move(cert));
                }

        std::vector<Edge> e1s, e2s;
        if (symmetry_reduction) {
            for (const auto& o : orb.edge_orbits) e1s.push_back(o[0]);
            for (const auto& o : orb2.edge_orbits) e2s.push_back(o[0]);
        } else {
            e1s = edges(g);
            e2s = edges(h);
        }
        for (const Edge& e1 : e1s)
            for (const Edge& e2 : e2s)
                for (auto& cert : replaceable_edges(ds1, e1, ds2, e2)) {
                    row.rep_edge = true;
                    row.edge_certs.push_back(std::move(cert));
                }
    }
    return row;
}

// One left-side instance of the batch construction: two graphs with a
// certified anchor pair.
struct ConstructionInstance {
    CompositionSpec::Kind kind;
    Graph g1, g2;
    Vertex u = -1, v = -1;
    std::optional<Edge> e1, e2;
    Bijection map;  // certified replaceable map between the anchor sets
};

inline std::vector<ConstructionInstance> instances_from_catalog(const Catalog& cat,
                                                                bool symmetry_reduction) {
    std::vector<ConstructionInstance> out;
    // within-graph instances: anchors in different orbits
    for (size_t gi = 0; gi < cat.size(); ++gi) {
        const Graph g = cat.graph(gi);
        const OrbitPartition orb = automorphism_orbits(g);
        SelfCensusRow row = self_census_graph(g, orb, symmetry_reduction);
        for (const auto& cert : row.vertex_certs) {
            ConstructionInstance inst;
            inst.kind = CompositionSpec::Kind::vertex;
            inst.g1 = cert.g1;
            inst.g2 = cert.g2;
            inst.u = cert.u;
            inst.v = cert.v;
            inst.map = cert.map;
            out.push_back(std::move(inst));
        }
        for (const auto& cert : row.edge_certs) {
            ConstructionInstance inst;
            inst.kind = CompositionSpec::Kind::edge;
            inst.g1 = cert.g1;
            inst.g2 = cert.g2;
            inst.e1 = cert.e1;
            inst.e2 = cert.e2;
            inst.map = cert.map;
            out.push_back(std::move(inst));
        }
    }
    // cross-graph instances: anchors between distinct members of one
    // cospectral class
    const auto classes = partition_cospectral(cat);
    for (const auto& cls : classes) {
        if (cls.members.size() < 2) continue;
        for (size_t x = 0; x < cls.members.size(); ++x)
            for (size_t y = 0; y < cls.members.size(); ++y) {
                if (x == y) continue;
                MateCensusRow row =
                    mate_census_graph(cat, cls.members[x], {cls.members[y]}, symmetry_reduction);
                for (const auto& cert : row.vertex_certs) {
                    ConstructionInstance inst;
                    inst.kind = CompositionSpec::Kind::vertex;
                    inst.g1 = cert.g1;
                    inst.g2 = cert.g2;
                    inst.u = cert.u;
                    inst.v = cert.v;
                    inst.map = cert.map;
                    out.push_back(std::move(inst));
                }
                for (const auto& cert : row.edge_certs) {
                    ConstructionInstance inst;
                    inst.kind = CompositionSpec::Kind::edge;
                    inst.g1 = cert.g1;
                    inst.g2 = cert.g2;
                    inst.e1 = cert.e1;
                    inst.e2 = cert.e2;
                    inst.map = cert.map;
                    out.push_back(std::move(inst));
                }
            }
    }
    return out;
}

}  // namespace detail

// Forward-generate every composition output of every certified instance
// drawn from the lower catalogs, paired with every H, every H anchor up to
// orbit, and every stitch seed; keep the outputs that land in the order-N
// NUS3 set. Under the strict semantics an instance contributes only when its
// two outputs are non-isomorphic (an isomorphic pair demonstrates nothing
// about non-unique spectra).
inline std::set<std::string> constructed_set(int N, const std::map<int, Catalog>& lower,
                                             const std::set<std::string>& nus3_forms,
                                             const SurveyOptions& opts = {}) {
    std::set<std::string> out;

    auto process_outputs = [&](const Graph& o1, const Graph& o2) {
        const std::string c1 = canonical_form(o1).canonical_graph6;
        const std::string c2 = canonical_form(o2).canonical_graph6;
        if (is_k_regular(o1, 3) && !cyclic_edge_conn_le3(o1))
            throw std::logic_error("constructed_set: output with cyclic edge connectivity > 3");
        if (is_k_regular(o2, 3) && !cyclic_edge_conn_le3(o2))
            throw std::logic_error("constructed_set: output with cyclic edge connectivity > 3");
        if (opts.strict_constructed_semantics && c1 == c2) return;
        if (nus3_forms.count(c1)) out.insert(c1);
        if (nus3_forms.count(c2)) out.insert(c2);
    };

    for (const auto& [a, left_cat] : lower) {
        // vertex kind pairs with a + b = N + 2, edge kind with a + b = N
        for (const bool vertex_kind : {true, false}) {
            const int b = vertex_kind ? N + 2 - a : N - a;
            if (b < 4) continue;
            auto it = lower.find(b);
            if (it == lower.end()) continue;
            const Catalog& right_cat = it->second;

            std::vector<detail::ConstructionInstance> instances =
                detail::instances_from_catalog(left_cat, opts.symmetry_reduction);
            for (const auto& inst : instances) {
                const bool inst_vertex = inst.kind == CompositionSpec::Kind::vertex;
                if (inst_vertex != vertex_kind) continue;
                for (size_t hi = 0; hi < right_cat.size(); ++hi) {
                    const Graph H = right_cat.graph(hi);
                    const OrbitPartition horb = automorphism_orbits(H);
                    if (vertex_kind) {
                        const VertexSet Nu = neighborhood(inst.g1, inst.u);
                        std::vector<Vertex> anchors;
                        if (opts.symmetry_reduction)
                            for (const auto& o : horb.vertex_orbits) anchors.push_back(o[0]);
                        else
                            for (Vertex h = 0; h < H.order(); ++h) anchors.push_back(h);
                        for (Vertex h : anchors) {
                            for (const Bijection& f :
                                 detail::all_bijections(Nu, neighborhood(H, h))) {
                                CompositionSpec s1;
                                s1.kind = CompositionSpec::Kind::vertex;
                                s1.left = inst.g1;
                                s1.right = H;
                                s1.u = inst.u;
                                s1.v = h;
                                s1.stitch = f;
                                CompositionSpec s2 = s1;
                                s2.left = inst.g2;
                                s2.u = inst.v;
                                s2.stitch = inst.map.inverse().then(f);
                                process_outputs(vertex_composition(s1), vertex_composition(s2));
                            }
                        }
                    } else {
                        std::vector<Edge> anchors;
                        if (opts.symmetry_reduction)
                            for (const auto& o : horb.edge_orbits) anchors.push_back(o[0]);
                        else
                            anchors = edges(H);
                        for (const Edge& h : anchors) {
                            const VertexSet S{inst.e1->a, inst.e1->b};
                            for (const Bijection& f :
                                 detail::all_bijections(S, VertexSet{h.a, h.b})) {
                                CompositionSpec s1;
                                s1.kind = CompositionSpec::Kind::edge;
                                s1.left = inst.g1;
                                s1.right = H;
                                s1.e1 = inst.e1;
                                s1.e2 = h;
                                s1.stitch = f;
                                CompositionSpec s2 = s1;
                                s2.left = inst.g2;
                                s2.e1 = inst.e2;
                                s2.stitch = inst.map.inverse().then(f);
                                process_outputs(edge_composition(s1), edge_composition(s2));
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

struct SurveySources {
    Catalog catalog;
    std::map<int, Catalog> lower;  // catalogs feeding the constructed census
};

// The whole pipeline for one order: cospectral classes, NUS3/NUS3C, both
// self censuses, the mate censuses, and (when lower catalogs are provided)
// the constructed census.
inline SurveyData run_survey(const SurveySources& src, const SurveyOptions& opts = {}) {
    const Catalog& cat = src.catalog;
    SurveyData data;
    data.report.order = cat.order;
    data.report.total = cat.size();
    data.flags.assign(cat.size(), GraphFlags{});

    data.classes = partition_cospectral(cat);
    const std::vector<size_t> nus3_members = nus3(data.classes);
    for (size_t i : nus3_members) {
        data.flags[i].nus3 = true;
    }
    data.report.nus3_count = nus3_members.size();

    // self census, parallel per graph
    std::vector<detail::SelfCensusRow> self_rows(cat.size());
    detail::parallel_for(cat.size(), opts.jobs, [&](size_t i) {
        const Graph g = cat.graph(i);
        const OrbitPartition orb = automorphism_orbits(g);
        self_rows[i] = detail::self_census_graph(g, orb, opts.symmetry_reduction);
    });
    for (size_t i = 0; i < cat.size(); ++i) {
        data.flags[i].rep_vertex_self = self_rows[i].rep_vertex;
        data.flags[i].rep_edge_self = self_rows[i].rep_edge;
        if (self_rows[i].rep_vertex) ++data.report.rep_vertex_self;
        if (self_rows[i].rep_edge) ++data.report.rep_edge_self;
        for (auto& cert : self_rows[i].vertex_certs) data.self_vertex_certs.push_back(std::move(cert));
        for (auto& cert : self_rows[i].edge_certs) data.self_edge_certs.push_back(std::move(cert));
    }

    // mate census over the nontrivial classes
    std::vector<std::vector<size_t>> classmates(cat.size());
    for (const auto& cls : data.classes)
        if (cls.members.size() >= 2)
            for (size_t i : cls.members) classmates[i] = cls.members;
    std::vector<detail::MateCensusRow> mate_rows(cat.size());
    detail::parallel_for(cat.size(), opts.jobs, [&](size_t i) {
        if (!classmates[i].empty())
            mate_rows[i] = detail::mate_census_graph(cat, i, classmates[i], opts.symmetry_reduction);
    });
    for (size_t i = 0; i < cat.size(); ++i) {
        bool v = mate_rows[i].rep_vertex;
        bool e = mate_rows[i].rep_edge;
        if (!opts.strict_mate_semantics) {
            v = v || (data.flags[i].nus3 && data.flags[i].rep_vertex_self);
            e = e || (data.flags[i].nus3 && data.flags[i].rep_edge_self);
        }
        data.flags[i].rep_vertex_mate = v;
        data.flags[i].rep_edge_mate = e;
        if (v) ++data.report.rep_vertex_mate;
        if (e) ++data.report.rep_edge_mate;
        for (auto& cert : mate_rows[i].vertex_certs) data.mate_vertex_certs.push_back(std::move(cert));
        for (auto& cert : mate_rows[i].edge_certs) data.mate_edge_certs.push_back(std::move(cert));
    }

    // cyclic edge connectivity, only meaningful for the NUS3 members
    std::vector<char> cyc(cat.size(), 0);
    detail::parallel_for(nus3_members.size(), opts.jobs, [&](size_t k) {
        cyc[nus3_members[k]] = cyclic_edge_conn_le3(cat.graph(nus3_members[k])) ? 1 : 0;
    });
    for (size_t i : nus3_members)
        if (cyc[i]) {
            data.flags[i].nus3c = true;
            ++data.report.nus3c_count;
        }

    if (!src.lower.empty()) {
        std::set<std::string> nus3_forms;
        for (size_t i : nus3_members) nus3_forms.insert(cat.members[i]);
        data.constructed_forms = constructed_set(cat.order, src.lower, nus3_forms, opts);
        data.report.constructed_computed = true;
        data.report.constructed_count = data.constructed_forms.size();
        for (size_t i = 0; i < cat.size(); ++i)
            data.flags[i].constructed = data.constructed_forms.count(cat.members[i]) > 0;
    }
    return data;
}

// Exact ratio |constructed| / |NUS3| for the limit conjecture; the counts are
// kept unreduced.
struct ConjectureRatio {
    bool defined = false;
    size_t constructed = 0;
    size_t nus3_count = 0;

    std::string to_string() const {
        if (!defined || nus3_count == 0) return "n/a";
        return std::to_string(constructed) + "/" + std::to_string(nus3_count);
    }
    std::string to_decimal_string() const {
        if (!defined || nus3_count == 0) return "n/a";
        // 4 decimal places, round half up
        unsigned long long scaled =
            (static_cast<unsigned long long>(constructed) * 20000 + nus3_count) /
            (2 * static_cast<unsigned long long>(nus3_count));
        std::string frac = std::to_string(scaled % 10000);
        frac.insert(0, 4 - frac.size(), '0');
        return std::to_string(scaled / 10000) + "." + frac;
    }
};

inline ConjectureRatio conjecture_ratio(const SurveyData& data) {
    ConjectureRatio r;
    if (!data.report.constructed_computed || data.report.nus3_count == 0) return r;
    r.defined = true;
    r.constructed = data.report.constructed_count;
    r.nus3_count = data.report.nus3_count;
    return r;
}

}  // namespace cospec
