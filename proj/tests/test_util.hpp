// Shared helpers for the test suites: tiny builders and seeded random
// instance generators.
#ifndef KNESER_TEST_UTIL_HPP
#define KNESER_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "kneser/core.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/instance.hpp"

namespace kneser::testutil {

inline Mask set_of(std::initializer_list<int> elements, int n) {
    return mask_of(std::vector<int>(elements), n);
}

inline MultisetEdge edge_of(std::initializer_list<int> mult) {
    return MultisetEdge(std::vector<int>(mult));
}

// random non-empty distinct subsets of [n]
inline SetSystem random_system(std::mt19937& rng, const GroundContext& ground,
                               int max_members) {
    const Mask full = full_mask(ground.n());
    std::uniform_int_distribution<Mask> pick(1, full);
    std::vector<Mask> members;
    const int target = std::uniform_int_distribution<int>(0, max_members)(rng);
    int attempts = 0;
    while (static_cast<int>(members.size()) < target && attempts < 200) {
        Mask m = pick(rng);
        if (std::find(members.begin(), members.end(), m) == members.end())
            members.push_back(m);
        ++attempts;
    }
    return SetSystem(ground, members);
}

inline GroundContext random_ground(std::mt19937& rng, int max_n, int max_s) {
    const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
    std::vector<int> s(static_cast<size_t>(n));
    for (int& si : s) si = std::uniform_int_distribution<int>(1, max_s)(rng);
    return GroundContext(n, std::move(s));
}

// random loop-free uniform hypergraph on small vertex counts
inline Hypergraph random_hypergraph(std::mt19937& rng, int max_vertices,
                                    int max_r, bool multiset,
                                    double keep_probability) {
    const int v = std::uniform_int_distribution<int>(2, max_vertices)(rng);
    const int r = std::uniform_int_distribution<int>(2, max_r)(rng);
    Hypergraph complete = complete_hypergraph(v, r, multiset);
    std::bernoulli_distribution keep(keep_probability);
    std::vector<MultisetEdge> edges;
    for (const MultisetEdge& e : complete.edges()) {
        if (keep(rng)) edges.push_back(e);
    }
    return Hypergraph(v, r, multiset, std::move(edges));
}

} // namespace kneser::testutil

#endif // KNESER_TEST_UTIL_HPP
