// Proper colorings and the exact chromatic-number solver. Color classes can
// be checked against materialized edges or against the implicit Kneser edge
// oracle; both modes give identical answers.
#ifndef KNESER_COLORING_HPP
#define KNESER_COLORING_HPP

#include <chrono>
#include <optional>
#include <utility>
#include <vector>

#include "kneser/core.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/instance.hpp"

namespace kneser {

// Vertex -> color assignment; colors are 1-based and drawn from [colors].
struct Coloring {
    int colors = 0;
    std::vector<int> assignment;

    bool operator==(const Coloring&) const = default;
};

struct ColoringVerdict {
    bool proper = false;
    std::optional<MultisetEdge> violation; // one monochromatic edge
};

enum class OracleMode { explicit_edges, implicit_instance };

// Answers "does this vertex subset contain an edge?" either from an explicit
// edge list or by running the capacity-pruned search on a Kneser instance.
class ColorClassOracle {
public:
    explicit ColorClassOracle(const Hypergraph& h) : h_(&h) {}
    explicit ColorClassOracle(const KneserInstance& inst) : inst_(&inst) {}

    OracleMode mode() const {
        return h_ ? OracleMode::explicit_edges : OracleMode::implicit_instance;
    }

    int vertex_count() const {
        return h_ ? h_->vertex_count() : inst_->vertex_count();
    }

    const Hypergraph* hypergraph() const { return h_; }
    const KneserInstance* instance() const { return inst_; }

    std::optional<MultisetEdge> find_edge_within(Mask cls,
                                                 int must_use = -1) const {
        if (h_) {
            for (const MultisetEdge& e : h_->edges()) {
                Mask s = e.support_mask();
                if ((s & ~cls) != 0) continue;
                if (must_use >= 0 && !((s >> must_use) & 1u)) continue;
                return e;
            }
            return std::nullopt;
        }
        return find_kneser_edge_within(*inst_, cls, must_use);
    }

    bool class_independent(Mask cls) const {
        return !find_edge_within(cls).has_value();
    }

    // independence of cls given that cls minus `vertex` is already known
    // independent; only edges using `vertex` can appear
    bool class_independent_with(Mask cls, int vertex) const {
        return !find_edge_within(cls, vertex).has_value();
    }

private:
    const Hypergraph* h_ = nullptr;
    const KneserInstance* inst_ = nullptr;
};

inline bool class_is_independent(const ColorClassOracle& oracle, Mask cls) {
    return oracle.class_independent(cls);
}

namespace detail {

inline void check_assignment(const Coloring& c, int vertex_count) {
    if (static_cast<int>(c.assignment.size()) != vertex_count)
        throw input_error("assignment length must equal the vertex count");
    for (int col : c.assignment) {
        if (col < 1 || col > c.colors)
            throw input_error("vertex color outside [1,colors]");
    }
}

inline ColoringVerdict verify_with_oracle(const ColorClassOracle& oracle,
                                          const Coloring& c) {
    check_assignment(c, oracle.vertex_count());
    for (int col = 1; col <= c.colors; ++col) {
        Mask cls = 0;
        for (int v = 0; v < oracle.vertex_count(); ++v) {
            if (c.assignment[static_cast<size_t>(v)] == col)
                cls |= Mask{1} << v;
        }
        if (auto edge = oracle.find_edge_within(cls))
            return {false, std::move(edge)};
    }
    return {true, std::nullopt};
}

} // namespace detail

// proper iff no edge is monochromatic; otherwise reports a witness edge
inline ColoringVerdict verify_coloring(const Hypergraph& h, const Coloring& c) {
    detail::check_assignment(c, h.vertex_count());
    for (const MultisetEdge& e : h.edges()) {
        int seen = 0;
        bool mono = true;
        for (int v : support(e)) {
            int col = c.assignment[static_cast<size_t>(v - 1)];
            if (seen == 0) seen = col;
            else if (seen != col) { mono = false; break; }
        }
        if (mono) return {false, e};
    }
    return {true, std::nullopt};
}

inline ColoringVerdict verify_coloring(const KneserInstance& inst,
                                       const Coloring& c) {
    ColorClassOracle oracle(inst);
    return detail::verify_with_oracle(oracle, c);
}

// Smallest-fitting-color greedy: each vertex in `order` receives the least
// color whose class stays independent. Always proper; color count >= chi.
inline Coloring greedy_coloring(const ColorClassOracle& oracle,
                                const std::vector<int>& order) {
    const int V = oracle.vertex_count();
    if (static_cast<int>(order.size()) != V)
        throw input_error("order must be a permutation of the vertices");
    std::vector<bool> seen(static_cast<size_t>(V), false);
    for (int v : order) {
        if (v < 0 || v >= V || seen[static_cast<size_t>(v)])
            throw input_error("order must be a permutation of the vertices");
        seen[static_cast<size_t>(v)] = true;
    }
    std::vector<int> assignment(static_cast<size_t>(V), 0);
    std::vector<Mask> classes;
    for (int v : order) {
        int chosen = -1;
        for (size_t c = 0; c < classes.size(); ++c) {
            Mask cls = classes[c] | (Mask{1} << v);
            if (oracle.class_independent_with(cls, v)) {
                chosen = static_cast<int>(c);
                break;
            }
        }
        if (chosen < 0) {
            classes.push_back(0);
            chosen = static_cast<int>(classes.size()) - 1;
        }
        classes[static_cast<size_t>(chosen)] |= Mask{1} << v;
        assignment[static_cast<size_t>(v)] = chosen + 1;
    }
    return Coloring{static_cast<int>(classes.size()), std::move(assignment)};
}

inline Coloring greedy_coloring(const Hypergraph& h,
                                const std::vector<int>& order) {
    return greedy_coloring(ColorClassOracle(h), order);
}

inline Coloring greedy_coloring(const KneserInstance& inst,
                                const std::vector<int>& order) {
    return greedy_coloring(ColorClassOracle(inst), order);
}

// The explicit map S -> min{min S, n-2} on the pair system binom([n],2).
// Proper for kg^r_{r-1}(binom([n],2)) and uses n-2 colors.
inline Coloring star_coloring_pairs(int n, int r) {
    if (n < 4 || r < 4)
        throw input_error("star coloring of the pair system needs n,r >= 4");
    SetSystem pairs = SetSystem::binomial(GroundContext::uniform(n, r - 1), 2);
    std::vector<int> assignment;
    assignment.reserve(static_cast<size_t>(pairs.size()));
    for (Mask member : pairs.members()) {
        int least = std::countr_zero(member) + 1;
        assignment.push_back(std::min(least, n - 2));
    }
    return Coloring{n - 2, std::move(assignment)};
}

struct ChiBudget {
    long long wall_ms = -1; // < 0: unlimited
};

struct ChiResult {
    bool exact = false;
    int chi = -1;                    // valid when exact
    int lower = 0;                   // certified bounds, always valid
    int upper = 0;
    std::optional<Coloring> witness; // optimal when exact, greedy otherwise
};

namespace detail {

enum class SearchStatus { found, exhausted, out_of_time };

class Deadline {
public:
    explicit Deadline(long long wall_ms) {
        if (wall_ms >= 0) {
            at_ = std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(wall_ms);
            armed_ = true;
        }
    }
    bool expired() {
        if (!armed_) return false;
        if (++tick_ % 256 != 1) return false;
        return std::chrono::steady_clock::now() >= at_;
    }

private:
    bool armed_ = false;
    std::uint64_t tick_ = 0;
    std::chrono::steady_clock::time_point at_;
};

// Backtracking m-colorability search over explicit constraint supports.
// Constraint counters give O(1) forbidden-color checks; branching follows
// max saturation, then max degree, then least index. Symmetry is broken by
// fixing vertex 0 to color 1 and introducing new colors in search order.
class ExplicitSearch {
public:
    ExplicitSearch(int vertex_count, const std::vector<Mask>& constraints)
        : V_(vertex_count), cons_(constraints) {
        inc_.resize(static_cast<size_t>(V_));
        cons_vertices_.resize(cons_.size());
        for (size_t e = 0; e < cons_.size(); ++e) {
            for (int v : elements_of(cons_[e])) {
                inc_[static_cast<size_t>(v - 1)].push_back(static_cast<int>(e));
                cons_vertices_[e].push_back(v - 1);
            }
        }
        degree_.assign(static_cast<size_t>(V_), 0);
        for (int v = 0; v < V_; ++v)
            degree_[static_cast<size_t>(v)] =
                static_cast<int>(inc_[static_cast<size_t>(v)].size());
    }

    SearchStatus colorable(int m, Deadline& deadline,
                           std::vector<int>& out_assignment) {
        m_ = m;
        color_.assign(static_cast<size_t>(V_), 0);
        cnt_.assign(cons_.size(),
                    std::vector<int>(static_cast<size_t>(m_ + 1), 0));
        forb_.assign(static_cast<size_t>(V_),
                     std::vector<int>(static_cast<size_t>(m_ + 1), 0));
        used_ = 1;
        colored_ = 0;
        assign(0, 1);
        SearchStatus st = recurse(deadline);
        if (st == SearchStatus::found) out_assignment = color_;
        return st;
    }

private:
    void assign(int v, int c) {
        color_[static_cast<size_t>(v)] = c;
        ++colored_;
        for (int e : inc_[static_cast<size_t>(v)]) {
            auto& row = cnt_[static_cast<size_t>(e)];
            int sz = static_cast<int>(cons_vertices_[static_cast<size_t>(e)].size());
            if (++row[static_cast<size_t>(c)] == sz - 1) {
                for (int u : cons_vertices_[static_cast<size_t>(e)]) {
                    if (color_[static_cast<size_t>(u)] != c) {
                        ++forb_[static_cast<size_t>(u)][static_cast<size_t>(c)];
                        break; // exactly one vertex of e is not colored c
                    }
                }
            }
        }
    }

    void unassign(int v, int c) {
        for (int e : inc_[static_cast<size_t>(v)]) {
            auto& row = cnt_[static_cast<size_t>(e)];
            int sz = static_cast<int>(cons_vertices_[static_cast<size_t>(e)].size());
            if (row[static_cast<size_t>(c)] == sz - 1) {
                for (int u : cons_vertices_[static_cast<size_t>(e)]) {
                    if (color_[static_cast<size_t>(u)] != c) {
                        --forb_[static_cast<size_t>(u)][static_cast<size_t>(c)];
                        break;
                    }
                }
            }
            --row[static_cast<size_t>(c)];
        }
        color_[static_cast<size_t>(v)] = 0;
        --colored_;
    }

    int saturation(int v) const {
        int s = 0;
        const auto& row = forb_[static_cast<size_t>(v)];
        for (int c = 1; c <= m_; ++c) s += (row[static_cast<size_t>(c)] > 0);
        return s;
    }

    SearchStatus recurse(Deadline& deadline) {
        if (colored_ == V_) return SearchStatus::found;
        if (deadline.expired()) return SearchStatus::out_of_time;
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < V_; ++v) {
            if (color_[static_cast<size_t>(v)] != 0) continue;
            int sat = saturation(v);
            int deg = degree_[static_cast<size_t>(v)];
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        const int v = best;
        const int cmax = std::min(used_ + 1, m_);
        for (int c = 1; c <= cmax; ++c) {
            if (forb_[static_cast<size_t>(v)][static_cast<size_t>(c)] > 0)
                continue;
            const bool fresh = (c == used_ + 1);
            if (fresh) ++used_;
            assign(v, c);
            SearchStatus st = recurse(deadline);
            if (st != SearchStatus::exhausted) return st;
            unassign(v, c);
            if (fresh) --used_;
        }
        return SearchStatus::exhausted;
    }

    int V_;
    std::vector<Mask> cons_;
    std::vector<std::vector<int>> inc_;
    std::vector<std::vector<int>> cons_vertices_;
    std::vector<int> degree_;
    int m_ = 0;
    int used_ = 0;
    int colored_ = 0;
    std::vector<int> color_;
    std::vector<std::vector<int>> cnt_;
    std::vector<std::vector<int>> forb_;
};

// Same search driven by oracle queries; forbidden colors are cached in
// per-vertex bit masks and rolled back through a trail. Used when the edge
// set is not materialized.
class ImplicitSearch {
public:
    ImplicitSearch(const ColorClassOracle& oracle,
                   const std::vector<int>& conflict_degree)
        : oracle_(oracle), V_(oracle.vertex_count()),
          degree_(conflict_degree) {}

    SearchStatus colorable(int m, Deadline& deadline,
                           std::vector<int>& out_assignment) {
        m_ = m;
        color_.assign(static_cast<size_t>(V_), 0);
        forb_.assign(static_cast<size_t>(V_), 0u);
        classes_.assign(static_cast<size_t>(m_ + 1), 0);
        trail_.clear();
        used_ = 1;
        colored_ = 0;
        assign(0, 1);
        SearchStatus st = recurse(deadline);
        if (st == SearchStatus::found) out_assignment = color_;
        return st;
    }

private:
    void assign(int v, int c) {
        color_[static_cast<size_t>(v)] = c;
        classes_[static_cast<size_t>(c)] |= Mask{1} << v;
        ++colored_;
        const std::uint64_t bit = std::uint64_t{1} << (c - 1);
        for (int u = 0; u < V_; ++u) {
            if (color_[static_cast<size_t>(u)] != 0) continue;
            if (forb_[static_cast<size_t>(u)] & bit) continue;
            Mask cls = classes_[static_cast<size_t>(c)] | (Mask{1} << u);
            if (!oracle_.class_independent_with(cls, u)) {
                forb_[static_cast<size_t>(u)] |= bit;
                trail_.emplace_back(u, c);
            }
        }
    }

    void unassign(int v, int c, size_t trail_mark) {
        while (trail_.size() > trail_mark) {
            auto [u, uc] = trail_.back();
            trail_.pop_back();
            forb_[static_cast<size_t>(u)] &= ~(std::uint64_t{1} << (uc - 1));
        }
        classes_[static_cast<size_t>(c)] &= ~(Mask{1} << v);
        color_[static_cast<size_t>(v)] = 0;
        --colored_;
    }

    SearchStatus recurse(Deadline& deadline) {
        if (colored_ == V_) return SearchStatus::found;
        if (deadline.expired()) return SearchStatus::out_of_time;
        const std::uint64_t active =
            (m_ >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m_) - 1);
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < V_; ++v) {
            if (color_[static_cast<size_t>(v)] != 0) continue;
            int sat = std::popcount(forb_[static_cast<size_t>(v)] & active);
            int deg = degree_[static_cast<size_t>(v)];
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        const int v = best;
        const int cmax = std::min(used_ + 1, m_);
        for (int c = 1; c <= cmax; ++c) {
            if (forb_[static_cast<size_t>(v)] & (std::uint64_t{1} << (c - 1)))
                continue;
            const bool fresh = (c == used_ + 1);
            if (fresh) ++used_;
            const size_t mark = trail_.size();
            assign(v, c);
            SearchStatus st = recurse(deadline);
            if (st != SearchStatus::exhausted) return st;
            unassign(v, c, mark);
            if (fresh) --used_;
        }
        return SearchStatus::exhausted;
    }

    const ColorClassOracle& oracle_;
    int V_;
    std::vector<int> degree_;
    int m_ = 0;
    int used_ = 0;
    int colored_ = 0;
    std::vector<int> color_;
    std::vector<std::uint64_t> forb_;
    std::vector<Mask> classes_;
    std::vector<std::pair<int, int>> trail_;
};

// greedy clique on the pairwise-conflict graph; a clique must be rainbow, so
// its size certifies a lower bound on chi
inline int conflict_clique_bound(const std::vector<Mask>& conflict_adj) {
    const int V = static_cast<int>(conflict_adj.size());
    std::vector<int> order(static_cast<size_t>(V));
    for (int v = 0; v < V; ++v) order[static_cast<size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(conflict_adj[static_cast<size_t>(a)]) >
               std::popcount(conflict_adj[static_cast<size_t>(b)]);
    });
    Mask clique = 0;
    int size = 0;
    for (int v : order) {
        if ((conflict_adj[static_cast<size_t>(v)] & clique) == clique) {
            clique |= Mask{1} << v;
            ++size;
        }
    }
    return size;
}

} // namespace detail

// Exact chromatic number by iterative deepening with certified fallback
// bounds when the wall-clock budget runs out.
inline ChiResult chromatic_number(const ColorClassOracle& oracle,
                                  ChiBudget budget = {}) {
    const int V = oracle.vertex_count();
    if (V > max_ground_size)
        throw capacity_error("vertex count exceeds the solver limit");
    ChiResult result;
    if (V == 0) {
        result.exact = true;
        result.chi = 0;
        result.lower = result.upper = 0;
        result.witness = Coloring{0, {}};
        return result;
    }
    Mask all = full_mask(V);
    if (oracle.class_independent(all)) {
        result.exact = true;
        result.chi = 1;
        result.lower = result.upper = 1;
        result.witness = Coloring{1, std::vector<int>(static_cast<size_t>(V), 1)};
        return result;
    }

    std::vector<int> natural(static_cast<size_t>(V));
    for (int v = 0; v < V; ++v) natural[static_cast<size_t>(v)] = v;
    Coloring greedy = greedy_coloring(oracle, natural);
    const int upper = greedy.colors;

    // pairwise conflicts (edges supported on two vertices) seed the bound
    std::vector<Mask> conflict_adj(static_cast<size_t>(V), 0);
    for (int u = 0; u < V; ++u) {
        for (int w = u + 1; w < V; ++w) {
            Mask pair = (Mask{1} << u) | (Mask{1} << w);
            if (!oracle.class_independent(pair)) {
                conflict_adj[static_cast<size_t>(u)] |= Mask{1} << w;
                conflict_adj[static_cast<size_t>(w)] |= Mask{1} << u;
            }
        }
    }
    const int lower = std::max(2, detail::conflict_clique_bound(conflict_adj));

    result.lower = lower;
    result.upper = upper;
    if (lower >= upper) {
        result.exact = true;
        result.chi = upper;
        result.witness = std::move(greedy);
        return result;
    }

    detail::Deadline deadline(budget.wall_ms);
    std::vector<Mask> minimal;
    std::vector<int> conflict_degree(static_cast<size_t>(V), 0);
    if (oracle.mode() == OracleMode::explicit_edges) {
        minimal = oracle.hypergraph()->minimal_supports();
    } else {
        for (int v = 0; v < V; ++v)
            conflict_degree[static_cast<size_t>(v)] =
                std::popcount(conflict_adj[static_cast<size_t>(v)]);
    }

    std::vector<int> assignment;
    for (int m = lower; m < upper; ++m) {
        detail::SearchStatus st;
        if (oracle.mode() == OracleMode::explicit_edges) {
            detail::ExplicitSearch search(V, minimal);
            st = search.colorable(m, deadline, assignment);
        } else {
            detail::ImplicitSearch search(oracle, conflict_degree);
            st = search.colorable(m, deadline, assignment);
        }
        if (st == detail::SearchStatus::found) {
            result.exact = true;
            result.chi = m;
            result.lower = result.upper = m;
            result.witness = Coloring{m, std::move(assignment)};
            return result;
        }
        if (st == detail::SearchStatus::out_of_time) {
            result.exact = false;
            result.lower = m; // every count below m is refuted
            result.upper = upper;
            result.witness = std::move(greedy);
            return result;
        }
    }
    result.exact = true;
    result.chi = upper;
    result.lower = result.upper = upper;
    result.witness = std::move(greedy);
    return result;
}

inline ChiResult chromatic_number(const Hypergraph& h, ChiBudget budget = {}) {
    return chromatic_number(ColorClassOracle(h), budget);
}

// Candidate count up to which the solver materializes the edge set; dense
// multiset instances above it solve faster against the implicit oracle.
inline constexpr std::uint64_t solver_materialize_cap = 100'000;

// Materializes the edge set when it stays small (the counter machinery is
// faster there), otherwise solves against the implicit oracle.
inline ChiResult chromatic_number(const KneserInstance& inst,
                                  ChiBudget budget = {},
                                  std::uint64_t cap = solver_materialize_cap) {
    const int m = inst.vertex_count();
    std::uint64_t candidates =
        inst.multiset_allowed()
            ? binomial_capped(static_cast<std::uint64_t>(m + inst.r() - 1),
                              static_cast<std::uint64_t>(inst.r()), cap)
            : binomial_capped(static_cast<std::uint64_t>(m),
                              static_cast<std::uint64_t>(inst.r()), cap);
    if (candidates <= cap) {
        Hypergraph h = build_kneser(inst, cap);
        return chromatic_number(ColorClassOracle(h), budget);
    }
    return chromatic_number(ColorClassOracle(inst), budget);
}

} // namespace kneser

#endif // KNESER_COLORING_HPP
