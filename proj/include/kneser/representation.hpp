// Representability toolkit: the up-monotone and convex predicates, the
// explicit Kneser representation of up-monotone hypergraphs through
// complement edges, and the clique characterization for the s=1 case.
#ifndef KNESER_REPRESENTATION_HPP
#define KNESER_REPRESENTATION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kneser/core.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/instance.hpp"
#include "kneser/rational.hpp"

namespace kneser {

// true iff every loop-free r-multiset whose support contains an edge support
// is itself an edge, i.e. the hypergraph equals its own closure
inline bool is_up_monotone(const Hypergraph& h) {
    if (h.edges().empty()) return true;
    Hypergraph closed = up_monotone_closure(h, h.r());
    return closed.edges() == h.edges();
}

// A pair (e, e') with e an edge whose support is contained in the support of
// the non-edge e'; empty when the hypergraph is up-monotone.
inline std::optional<std::pair<MultisetEdge, MultisetEdge>>
up_monotone_violation(const Hypergraph& h) {
    if (h.edges().empty()) return std::nullopt;
    Hypergraph closed = up_monotone_closure(h, h.r());
    for (const MultisetEdge& extra : closed.edges()) {
        if (h.has_edge(extra)) continue;
        Mask s = extra.support_mask();
        for (const MultisetEdge& e : h.edges()) {
            Mask es = e.support_mask();
            if ((s & es) == es) return std::make_pair(e, extra);
        }
    }
    return std::nullopt;
}

inline constexpr std::uint64_t convexity_generator_cap = 10'000;

// true iff every integral vector with coordinates below r lying in the
// convex hull of the edge multiplicity vectors is itself an edge vector.
// Hull membership is exact rational feasibility, never floating point.
inline bool is_convex(const Hypergraph& h) {
    if (h.edges().size() <= 1) return true;
    std::uint64_t candidates = binomial_capped(
        static_cast<std::uint64_t>(h.vertex_count() + h.r() - 1),
        static_cast<std::uint64_t>(h.r()), convexity_generator_cap);
    if (candidates > convexity_generator_cap)
        throw capacity_error("convexity check limited to small hypergraphs");

    std::vector<std::vector<int>> generators;
    generators.reserve(h.edges().size());
    for (const MultisetEdge& e : h.edges()) generators.push_back(e.mult);

    bool convex = true;
    detail::enumerate_uniform_vectors(
        h.vertex_count(), h.r(), false, [&](const std::vector<int>& mult) {
            if (!convex) return;
            MultisetEdge candidate(mult);
            if (!candidate.loop_free()) return; // coordinates below r force this
            if (h.has_edge(candidate)) return;
            if (in_convex_hull(generators, mult)) convex = false;
        });
    return convex;
}

// complement within K^r_n: all loop-free r-multisets over the vertex set
// that are not edges of h
inline Hypergraph complement_hypergraph(const Hypergraph& h) {
    Hypergraph complete = complete_hypergraph(h.vertex_count(), h.r(), true);
    std::vector<MultisetEdge> edges;
    for (const MultisetEdge& e : complete.edges()) {
        if (!h.has_edge(e)) edges.push_back(e);
    }
    return Hypergraph(h.vertex_count(), h.r(), true, std::move(edges));
}

// Kneser representation of an up-monotone hypergraph: ground set [n] plus
// one fresh element per complement edge, s identically r-1, and
// S_i = {i} union {complement edges whose support contains i}.
struct Representation {
    GroundContext ground;
    SetSystem system;
    std::vector<int> vertex_map; // original vertex (0-based) -> system index
    std::vector<MultisetEdge> complement_edges; // labels n+1.. in this order
    int r = 2;
};

inline Representation represent_up_monotone(const Hypergraph& h) {
    if (auto violation = up_monotone_violation(h)) {
        throw input_error(
            "hypergraph is not up-monotone: edge with support " +
            subset_to_string(violation->first.support_mask()) +
            " but missing multiset with support " +
            subset_to_string(violation->second.support_mask()));
    }
    const int n = h.vertex_count();
    const int r = h.r();
    Hypergraph complement = complement_hypergraph(h);
    const int t = static_cast<int>(complement.edges().size());
    if (n + t > max_ground_size)
        throw capacity_error("representation ground set exceeds capacity");

    GroundContext ground(n + t, std::vector<int>(static_cast<size_t>(n + t), r - 1));
    std::vector<Mask> members(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) members[static_cast<size_t>(i)] = Mask{1} << i;
    for (int j = 0; j < t; ++j) {
        Mask s = complement.edges()[static_cast<size_t>(j)].support_mask();
        for (int v : elements_of(s))
            members[static_cast<size_t>(v - 1)] |= Mask{1} << (n + j);
    }

    SetSystem system(ground, members);
    std::vector<int> vertex_map(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const Mask target = members[static_cast<size_t>(i)];
        for (int idx = 0; idx < system.size(); ++idx) {
            if (system.member(idx) == target) {
                vertex_map[static_cast<size_t>(i)] = idx;
                break;
            }
        }
    }
    return Representation{std::move(ground), std::move(system),
                          std::move(vertex_map), complement.edges(), r};
}

// builds KG^r_{r-1} of the representation system and compares its edge set
// with the original hypergraph under the vertex map
inline bool verify_representation(const Hypergraph& h,
                                  const Representation& rep) {
    if (static_cast<int>(rep.vertex_map.size()) != h.vertex_count())
        return false;
    if (rep.system.size() != h.vertex_count()) return false;
    if (rep.r != h.r()) return false;

    KneserInstance instance(rep.system, rep.r, Variant::with_multiplicities);
    Hypergraph built = build_kneser(instance);

    std::vector<MultisetEdge> pulled;
    pulled.reserve(built.edges().size());
    for (const MultisetEdge& e : built.edges()) {
        std::vector<int> mult(static_cast<size_t>(h.vertex_count()), 0);
        for (int v = 0; v < h.vertex_count(); ++v)
            mult[static_cast<size_t>(v)] =
                e.mult[static_cast<size_t>(rep.vertex_map[static_cast<size_t>(v)])];
        pulled.emplace_back(std::move(mult));
    }
    std::sort(pulled.begin(), pulled.end());
    return pulled == h.edges();
}

// Representability as a 1-disjoint Kneser hypergraph is decided by the
// canonical co-occurrence graph: any representing disjointness structure
// yields a graph between G and one with the same r-cliques, so E must equal
// the r-cliques of G.
struct CliqueTestResult {
    bool representable = false;
    std::vector<std::pair<int, int>> graph_edges; // canonical graph, 1-based
    std::optional<Mask> missing_clique; // r-clique of G that is not an edge
};

inline CliqueTestResult kg1_clique_test(const Hypergraph& h) {
    for (const MultisetEdge& e : h.edges()) {
        if (!e.is_set_edge())
            throw input_error("clique test needs set edges only");
    }
    const int V = h.vertex_count();
    const int r = h.r();
    std::vector<Mask> adj(static_cast<size_t>(V), 0);
    CliqueTestResult result;
    for (const MultisetEdge& e : h.edges()) {
        std::vector<int> vs = support(e);
        for (size_t a = 0; a < vs.size(); ++a) {
            for (size_t b = a + 1; b < vs.size(); ++b) {
                int u = vs[a] - 1, w = vs[b] - 1;
                if (!((adj[static_cast<size_t>(u)] >> w) & 1u))
                    result.graph_edges.emplace_back(u + 1, w + 1);
                adj[static_cast<size_t>(u)] |= Mask{1} << w;
                adj[static_cast<size_t>(w)] |= Mask{1} << u;
            }
        }
    }
    std::sort(result.graph_edges.begin(), result.graph_edges.end());

    // every edge is an r-clique of G by construction; representability fails
    // exactly when G has an extra r-clique
    std::vector<int> chosen;
    std::function<bool(int, Mask)> extend = [&](int from, Mask common) -> bool {
        if (static_cast<int>(chosen.size()) == r) {
            Mask cliq = 0;
            for (int v : chosen) cliq |= Mask{1} << v;
            if (!h.has_edge(MultisetEdge::from_support(cliq, V))) {
                result.missing_clique = cliq;
                return true;
            }
            return false;
        }
        for (int v = from; v < V; ++v) {
            if (!((common >> v) & 1u)) continue;
            chosen.push_back(v);
            if (extend(v + 1, common & adj[static_cast<size_t>(v)])) return true;
            chosen.pop_back();
        }
        return false;
    };
    extend(0, full_mask(V));
    result.representable = !result.missing_clique.has_value();
    return result;
}

} // namespace kneser

#endif // KNESER_REPRESENTATION_HPP
