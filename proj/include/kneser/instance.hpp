// Generalized Kneser hypergraphs: s-disjointness, the edge-membership
// oracle, and explicit construction of KG^r_s(S) and kg^r_s(S).
#ifndef KNESER_INSTANCE_HPP
#define KNESER_INSTANCE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "kneser/core.hpp"
#include "kneser/hypergraph.hpp"

namespace kneser {

enum class Variant { with_multiplicities, without_multiplicities };

// true iff every ground element i lies in at most s_i of the family members
// (members counted with repetition)
inline bool is_s_disjoint(const std::vector<Mask>& family,
                          const GroundContext& ground) {
    Mask full = full_mask(ground.n());
    std::vector<int> count(static_cast<size_t>(ground.n()), 0);
    for (Mask member : family) {
        if ((member & ~full) != 0)
            throw input_error("family member has element outside [1,n]");
        for (int e : elements_of(member)) {
            if (++count[static_cast<size_t>(e - 1)] > ground.s_at(e))
                return false;
        }
    }
    return true;
}

// Vertex set S, uniformity r and the with/without-multiplicities variant.
// With-multiplicities instances require s_i < r for all i so that the
// resulting hypergraph is loop-free.
class KneserInstance {
public:
    KneserInstance(SetSystem system, int r, Variant variant)
        : system_(std::move(system)), r_(r), variant_(variant) {
        if (r_ < 2) throw input_error("uniformity r must be >= 2");
        if (variant_ == Variant::with_multiplicities) {
            for (int si : system_.ground().s()) {
                if (si >= r_)
                    throw input_error(
                        "with-multiplicities instance needs s_i < r for all i");
            }
        }
    }

    const SetSystem& system() const { return system_; }
    const GroundContext& ground() const { return system_.ground(); }
    int r() const { return r_; }
    Variant variant() const { return variant_; }
    int vertex_count() const { return system_.size(); }
    bool multiset_allowed() const {
        return variant_ == Variant::with_multiplicities;
    }

private:
    SetSystem system_;
    int r_;
    Variant variant_;
};

// true iff the candidate multiset of vertices {S_i with multiplicity m_i} is
// s-disjoint, loop-free, and (for the set-edge variant) repetition-free
inline bool is_kneser_edge(const KneserInstance& inst,
                           const MultisetEdge& candidate) {
    const int m = inst.vertex_count();
    if (static_cast<int>(candidate.mult.size()) != m)
        throw input_error("candidate length must equal the vertex count");
    if (candidate.size() != inst.r())
        throw input_error("candidate multiplicities must sum to r");
    if (!candidate.loop_free()) return false;
    if (!inst.multiset_allowed() && !candidate.is_set_edge()) return false;
    const GroundContext& ground = inst.ground();
    std::vector<int> count(static_cast<size_t>(ground.n()), 0);
    for (int v = 0; v < m; ++v) {
        int t = candidate.mult[static_cast<size_t>(v)];
        if (t < 0) throw input_error("candidate multiplicities must be >= 0");
        if (t == 0) continue;
        for (int e : elements_of(inst.system().member(v))) {
            if ((count[static_cast<size_t>(e - 1)] += t) > ground.s_at(e))
                return false;
        }
    }
    return true;
}

namespace detail {

// Capacity-pruned search over s-disjoint loop-free candidates supported on
// the given vertex list. High multiplicities are tried first (edges surface
// quickly on dense instances); callers needing the canonical order sort the
// results. Two prunes keep refutations cheap: per-position multiplicity caps,
// and the capacity-mass bound (one multiplicity unit on a member consumes
// one capacity unit per element of that member).
inline bool scan_kneser_edges(const KneserInstance& inst,
                              const std::vector<int>& vertices, int must_use,
                              const std::function<bool(const std::vector<int>&)>& visit) {
    const GroundContext& ground = inst.ground();
    const int k = static_cast<int>(vertices.size());
    const int r = inst.r();
    const bool set_only = !inst.multiset_allowed();

    std::vector<std::vector<int>> member_elements(static_cast<size_t>(k));
    std::vector<int> member_size(static_cast<size_t>(k), 0);
    std::vector<int> cap_static(static_cast<size_t>(k), 0);
    for (int j = 0; j < k; ++j) {
        member_elements[static_cast<size_t>(j)] =
            elements_of(inst.system().member(vertices[static_cast<size_t>(j)]));
        member_size[static_cast<size_t>(j)] =
            static_cast<int>(member_elements[static_cast<size_t>(j)].size());
        int cap = set_only ? 1 : r;
        for (int e : member_elements[static_cast<size_t>(j)])
            cap = std::min(cap, ground.s_at(e));
        cap_static[static_cast<size_t>(j)] = cap;
    }
    std::vector<long long> suffix_cap(static_cast<size_t>(k + 1), 0);
    std::vector<int> suffix_min_size(static_cast<size_t>(k + 1), 1);
    for (int j = k - 1; j >= 0; --j) {
        suffix_cap[static_cast<size_t>(j)] =
            suffix_cap[static_cast<size_t>(j + 1)] + cap_static[static_cast<size_t>(j)];
        suffix_min_size[static_cast<size_t>(j)] =
            (j == k - 1) ? member_size[static_cast<size_t>(j)]
                         : std::min(suffix_min_size[static_cast<size_t>(j + 1)],
                                    member_size[static_cast<size_t>(j)]);
    }

    int must_pos = -1;
    for (int j = 0; j < k; ++j) {
        if (vertices[static_cast<size_t>(j)] == must_use) must_pos = j;
    }
    if (must_use >= 0 && must_pos < 0) return false; // forced vertex absent

    std::vector<int> count(static_cast<size_t>(ground.n()), 0);
    std::vector<int> mult(static_cast<size_t>(k), 0);
    long long capacity_mass = 0; // total unused element capacity
    for (int i = 1; i <= ground.n(); ++i) capacity_mass += ground.s_at(i);
    bool keep_going = true;

    std::function<void(int, int, int)> rec = [&](int pos, int remaining,
                                                 int positive) {
        if (!keep_going) return;
        if (remaining == 0) {
            if (must_pos >= pos) return; // forced vertex would stay unused
            if (positive >= 2) {
                for (int j = pos; j < k; ++j) mult[static_cast<size_t>(j)] = 0;
                keep_going = visit(mult);
            }
            return;
        }
        if (pos == k || remaining > suffix_cap[static_cast<size_t>(pos)]) return;
        if (static_cast<long long>(remaining) *
                suffix_min_size[static_cast<size_t>(pos)] >
            capacity_mass)
            return;
        const std::vector<int>& elems = member_elements[static_cast<size_t>(pos)];
        int hi = std::min(remaining, cap_static[static_cast<size_t>(pos)]);
        for (int e : elems)
            hi = std::min(hi, ground.s_at(e) - count[static_cast<size_t>(e - 1)]);
        const int lo = (vertices[static_cast<size_t>(pos)] == must_use) ? 1 : 0;
        for (int t = hi; t >= lo && keep_going; --t) {
            if (t > 0) {
                for (int e : elems) count[static_cast<size_t>(e - 1)] += t;
                capacity_mass -=
                    static_cast<long long>(t) * member_size[static_cast<size_t>(pos)];
            }
            mult[static_cast<size_t>(pos)] = t;
            rec(pos + 1, remaining - t, positive + (t > 0));
            if (t > 0) {
                for (int e : elems) count[static_cast<size_t>(e - 1)] -= t;
                capacity_mass +=
                    static_cast<long long>(t) * member_size[static_cast<size_t>(pos)];
            }
        }
        mult[static_cast<size_t>(pos)] = 0;
    };
    rec(0, r, 0);
    return !keep_going; // true iff the visitor stopped the scan
}

} // namespace detail

// Some s-disjoint loop-free edge supported inside `allowed` (0-based vertex
// mask), optionally forced to use a given vertex; nullopt if none exists.
// Deterministic: the first edge in the scan order.
inline std::optional<MultisetEdge>
find_kneser_edge_within(const KneserInstance& inst, Mask allowed,
                        int must_use = -1) {
    std::vector<int> vertices;
    for (int v = 0; v < inst.vertex_count(); ++v) {
        if ((allowed >> v) & 1u) vertices.push_back(v);
    }
    std::optional<MultisetEdge> found;
    detail::scan_kneser_edges(
        inst, vertices, must_use, [&](const std::vector<int>& mult) {
            std::vector<int> dense(static_cast<size_t>(inst.vertex_count()), 0);
            for (size_t j = 0; j < vertices.size(); ++j)
                dense[static_cast<size_t>(vertices[j])] = mult[j];
            found = MultisetEdge(std::move(dense));
            return false; // stop at the first edge
        });
    return found;
}

// Explicit construction of KG^r_s(S) / kg^r_s(S). Enumeration is guarded by
// a candidate-count cap; larger instances must use the oracle interface.
inline Hypergraph build_kneser(const KneserInstance& inst,
                               std::uint64_t cap = default_enumeration_cap) {
    const int m = inst.vertex_count();
    std::uint64_t candidates =
        inst.multiset_allowed()
            ? binomial_capped(static_cast<std::uint64_t>(m + inst.r() - 1),
                              static_cast<std::uint64_t>(inst.r()), cap)
            : binomial_capped(static_cast<std::uint64_t>(m),
                              static_cast<std::uint64_t>(inst.r()), cap);
    if (candidates > cap)
        throw capacity_error(
            "candidate count exceeds the enumeration cap; use the implicit "
            "edge oracle instead");
    std::vector<int> vertices(static_cast<size_t>(m));
    for (int v = 0; v < m; ++v) vertices[static_cast<size_t>(v)] = v;
    std::vector<MultisetEdge> edges;
    detail::scan_kneser_edges(inst, vertices, -1,
                              [&](const std::vector<int>& mult) {
                                  edges.emplace_back(mult);
                                  return true;
                              });
    return Hypergraph(m, inst.r(), inst.multiset_allowed(), std::move(edges));
}

} // namespace kneser

#endif // KNESER_INSTANCE_HPP
