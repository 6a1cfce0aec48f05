// Uniform loop-free hypergraphs whose edges are multiplicity vectors over the
// vertices; set edges are the 0/1 special case. Provides the complete
// hypergraphs K^r_n / k^r_n and the up-monotone closure.
#ifndef KNESER_HYPERGRAPH_HPP
#define KNESER_HYPERGRAPH_HPP

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "kneser/core.hpp"

namespace kneser {

// r-multisubset of the vertex set, stored as a dense multiplicity vector.
struct MultisetEdge {
    std::vector<int> mult;

    MultisetEdge() = default;
    explicit MultisetEdge(std::vector<int> m) : mult(std::move(m)) {}

    static MultisetEdge from_support(Mask support, int vertex_count) {
        std::vector<int> m(static_cast<size_t>(vertex_count), 0);
        for (int v : elements_of(support)) m[static_cast<size_t>(v - 1)] = 1;
        return MultisetEdge(std::move(m));
    }

    int size() const {
        int r = 0;
        for (int x : mult) r += x;
        return r;
    }

    // vertices with positive multiplicity, as a 0-based-bit mask over vertices
    Mask support_mask() const {
        Mask s = 0;
        for (size_t i = 0; i < mult.size(); ++i) {
            if (mult[i] > 0) s |= Mask{1} << i;
        }
        return s;
    }

    int support_size() const {
        int c = 0;
        for (int x : mult) c += (x > 0);
        return c;
    }

    bool loop_free() const { return support_size() >= 2; }

    bool is_set_edge() const {
        return std::all_of(mult.begin(), mult.end(),
                           [](int x) { return x <= 1; });
    }

    auto operator<=>(const MultisetEdge&) const = default;
};

// Set of vertices with positive multiplicity (1-based vertex indices).
inline std::vector<int> support(const MultisetEdge& edge) {
    return elements_of(edge.support_mask());
}

class Hypergraph {
public:
    Hypergraph(int vertex_count, int r, bool multiset_allowed,
               std::vector<MultisetEdge> edges)
        : vertex_count_(vertex_count), r_(r),
          multiset_allowed_(multiset_allowed), edges_(std::move(edges)) {
        if (vertex_count_ < 0) throw input_error("vertex count must be >= 0");
        if (vertex_count_ > max_ground_size)
            throw capacity_error("vertex count exceeds bit-mask capacity");
        if (r_ < 2) throw input_error("uniformity r must be >= 2");
        for (const MultisetEdge& e : edges_) {
            if (static_cast<int>(e.mult.size()) != vertex_count_)
                throw input_error("edge multiplicity vector has wrong length");
            for (int x : e.mult) {
                if (x < 0) throw input_error("edge multiplicities must be >= 0");
            }
            if (e.size() != r_) throw input_error("edge is not r-uniform");
            if (!e.loop_free()) throw input_error("edges must be loop-free");
            if (!multiset_allowed_ && !e.is_set_edge())
                throw input_error("multiset edge in a set-edge hypergraph");
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    int vertex_count() const { return vertex_count_; }
    int r() const { return r_; }
    bool multiset_allowed() const { return multiset_allowed_; }
    const std::vector<MultisetEdge>& edges() const { return edges_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }

    bool has_edge(const MultisetEdge& e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    // distinct edge supports, in canonical subset order
    std::vector<Mask> supports() const {
        std::vector<Mask> out;
        out.reserve(edges_.size());
        for (const MultisetEdge& e : edges_) out.push_back(e.support_mask());
        std::sort(out.begin(), out.end(), subset_lex_less);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // inclusion-minimal edge supports; a color class is dependent iff it
    // contains one of these
    std::vector<Mask> minimal_supports() const {
        std::vector<Mask> all = supports();
        std::vector<Mask> minimal;
        if (vertex_count_ <= 22 && !all.empty()) {
            // subset sweep: dominated[m] = some support is contained in m
            const size_t space = size_t{1} << vertex_count_;
            std::vector<bool> dominated(space, false);
            for (Mask s : all) dominated[static_cast<size_t>(s)] = true;
            for (int v = 0; v < vertex_count_; ++v) {
                const size_t bit = size_t{1} << v;
                for (size_t m = 0; m < space; ++m) {
                    if ((m & bit) && dominated[m ^ bit]) dominated[m] = true;
                }
            }
            for (Mask s : all) {
                bool strictly = false;
                for (int v : elements_of(s)) {
                    if (dominated[static_cast<size_t>(s) ^
                                  (size_t{1} << (v - 1))]) {
                        strictly = true;
                        break;
                    }
                }
                if (!strictly) minimal.push_back(s);
            }
        } else {
            std::stable_sort(all.begin(), all.end(), [](Mask a, Mask b) {
                return std::popcount(a) < std::popcount(b);
            });
            for (Mask s : all) {
                bool dominated = false;
                for (Mask m : minimal) {
                    if ((s & m) == m) { dominated = true; break; }
                }
                if (!dominated) minimal.push_back(s);
            }
        }
        std::sort(minimal.begin(), minimal.end(), subset_lex_less);
        return minimal;
    }

    bool operator==(const Hypergraph&) const = default;

private:
    int vertex_count_;
    int r_;
    bool multiset_allowed_;
    std::vector<MultisetEdge> edges_;
};

namespace detail {

// Enumerates multiplicity vectors of total r over `count` positions in
// ascending lexicographic order; set_only restricts multiplicities to 0/1.
template <class F>
void enumerate_uniform_vectors(int count, int r, bool set_only, F&& visit) {
    std::vector<int> mult(static_cast<size_t>(count), 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == count) {
            if (remaining == 0) visit(mult);
            return;
        }
        if (set_only && remaining > count - pos) return;
        int hi = set_only ? std::min(1, remaining) : remaining;
        for (int t = 0; t <= hi; ++t) {
            mult[static_cast<size_t>(pos)] = t;
            rec(pos + 1, remaining - t);
        }
        mult[static_cast<size_t>(pos)] = 0;
    };
    rec(0, r);
}

} // namespace detail

inline constexpr std::uint64_t default_enumeration_cap = 5'000'000;

// K^r_n (multiset edges) or k^r_n (set edges): all loop-free r-multisubsets,
// respectively all r-subsets, of [n].
inline Hypergraph complete_hypergraph(int n, int r, bool multiset_allowed) {
    if (n < 1) throw input_error("complete hypergraph needs n >= 1");
    if (r < 2) throw input_error("complete hypergraph needs r >= 2");
    std::uint64_t count =
        multiset_allowed
            ? binomial_capped(static_cast<std::uint64_t>(n + r - 1),
                              static_cast<std::uint64_t>(r),
                              default_enumeration_cap)
            : binomial_capped(static_cast<std::uint64_t>(n),
                              static_cast<std::uint64_t>(r),
                              default_enumeration_cap);
    if (count > default_enumeration_cap)
        throw capacity_error("complete hypergraph too large to enumerate");
    std::vector<MultisetEdge> edges;
    detail::enumerate_uniform_vectors(
        n, r, !multiset_allowed, [&](const std::vector<int>& mult) {
            MultisetEdge e(mult);
            if (e.loop_free()) edges.push_back(std::move(e));
        });
    return Hypergraph(n, r, multiset_allowed, std::move(edges));
}

// Replaces each edge by all loop-free r-multisets whose support contains the
// edge's support. The result is r-uniform, up-monotone, and has the same
// chromatic number as the input.
inline Hypergraph up_monotone_closure(const Hypergraph& h, int r) {
    if (r < 2) throw input_error("closure needs r >= 2");
    for (const MultisetEdge& e : h.edges()) {
        if (e.support_size() > r)
            throw input_error("closure uniformity below an edge support size");
    }
    std::vector<Mask> req = h.minimal_supports();
    std::uint64_t count = binomial_capped(
        static_cast<std::uint64_t>(h.vertex_count() + r - 1),
        static_cast<std::uint64_t>(r), default_enumeration_cap);
    if (count > default_enumeration_cap)
        throw capacity_error("closure too large to enumerate");
    std::vector<MultisetEdge> edges;
    detail::enumerate_uniform_vectors(
        h.vertex_count(), r, false, [&](const std::vector<int>& mult) {
            MultisetEdge e(mult);
            if (!e.loop_free()) return;
            Mask s = e.support_mask();
            for (Mask m : req) {
                if ((s & m) == m) {
                    edges.push_back(std::move(e));
                    return;
                }
            }
        });
    return Hypergraph(h.vertex_count(), r, true, std::move(edges));
}

} // namespace kneser

#endif // KNESER_HYPERGRAPH_HPP
