#include <catch2/catch_amalgamated.hpp>

#include "kneser/core.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/instance.hpp"
#include "test_util.hpp"

using namespace kneser;
using kneser::testutil::edge_of;
using kneser::testutil::set_of;

TEST_CASE("ground context invariants") {
    GroundContext g(3, {3, 2, 1});
    CHECK(g.n() == 3);
    CHECK(g.n_bar() == 6);
    CHECK_THROWS_AS(GroundContext(0, {}), input_error);
    CHECK_THROWS_AS(GroundContext(2, {1, 0}), input_error);
    CHECK_THROWS_AS(GroundContext(2, {1}), input_error);
}

TEST_CASE("canonical subset order is lexicographic on sorted elements") {
    SetSystem pairs = SetSystem::binomial(GroundContext::uniform(4, 1), 2);
    std::vector<Mask> expected = {
        set_of({1, 2}, 4), set_of({1, 3}, 4), set_of({1, 4}, 4),
        set_of({2, 3}, 4), set_of({2, 4}, 4), set_of({3, 4}, 4)};
    CHECK(pairs.members() == expected);

    CHECK(subset_lex_less(set_of({1}, 3), set_of({1, 2}, 3)));
    CHECK(subset_lex_less(set_of({1, 3}, 3), set_of({2}, 3)));
    CHECK_FALSE(subset_lex_less(set_of({2}, 3), set_of({1, 2}, 3)));
}

TEST_CASE("set system rejects malformed members") {
    GroundContext g = GroundContext::uniform(3, 1);
    CHECK_THROWS_AS(SetSystem(g, {0}), input_error);
    CHECK_THROWS_AS(SetSystem(g, {set_of({1}, 3), set_of({1}, 3)}), input_error);
    CHECK_THROWS_AS(SetSystem(g, {Mask{1} << 5}), input_error);
}

TEST_CASE("s-disjointness worked examples") {
    GroundContext g(3, {3, 2, 1});
    Mask s12 = set_of({1, 2}, 3), s13 = set_of({1, 3}, 3),
         s23 = set_of({2, 3}, 3), s2 = set_of({2}, 3);
    CHECK_FALSE(is_s_disjoint({s12, s12, s23}, g)); // 2 occurs in all three
    CHECK(is_s_disjoint({s12, s12, s13}, g));
    CHECK(is_s_disjoint({s12, s13, s2}, g));
    CHECK(is_s_disjoint({}, g));
    CHECK_THROWS_AS(is_s_disjoint({Mask{1} << 4}, g), input_error);
}

TEST_CASE("kneser edge oracle on the pair system of [4]") {
    SetSystem pairs2 = SetSystem::binomial(GroundContext::uniform(4, 2), 2);
    KneserInstance KG(pairs2, 4, Variant::with_multiplicities);
    KneserInstance kg(pairs2, 4, Variant::without_multiplicities);

    // {{12,12,34,34}}: every ground element lies in exactly two of the sets
    MultisetEdge doubled = edge_of({2, 0, 0, 0, 0, 2});
    CHECK(is_kneser_edge(KG, doubled));
    CHECK_FALSE(is_kneser_edge(kg, doubled));

    CHECK_THROWS_AS(is_kneser_edge(KG, edge_of({2, 2})), input_error);
    CHECK_THROWS_AS(is_kneser_edge(KG, edge_of({1, 1, 1, 0, 0, 0})),
                    input_error); // sum is 3, not r
}

TEST_CASE("kneser edge oracle rejects overused elements") {
    SetSystem pairs3 = SetSystem::binomial(GroundContext::uniform(3, 1), 2);
    KneserInstance KG(pairs3, 3, Variant::with_multiplicities);
    // {{12,13,23}}: element 1 occurs in two sets but s_1 = 1
    CHECK_FALSE(is_kneser_edge(KG, edge_of({1, 1, 1})));
}

TEST_CASE("with-multiplicities instances require s below r") {
    SetSystem singletons = SetSystem::binomial(GroundContext::uniform(3, 3), 1);
    CHECK_THROWS_AS(KneserInstance(singletons, 3, Variant::with_multiplicities),
                    input_error);
    CHECK_NOTHROW(KneserInstance(singletons, 3, Variant::without_multiplicities));
    CHECK_NOTHROW(KneserInstance(singletons, 4, Variant::with_multiplicities));
}

TEST_CASE("building kneser hypergraphs reproduces the complete counts") {
    SetSystem singles3 = SetSystem::binomial(GroundContext::uniform(3, 2), 1);
    Hypergraph K33 = build_kneser(KneserInstance(singles3, 3, Variant::with_multiplicities));
    CHECK(K33.edge_count() == 7); // binom(5,3) - 3

    SetSystem singles4 = SetSystem::binomial(GroundContext::uniform(4, 2), 1);
    Hypergraph k34 = build_kneser(KneserInstance(singles4, 3, Variant::without_multiplicities));
    CHECK(k34.edge_count() == 4); // binom(4,3)

    SetSystem pairs3 = SetSystem::binomial(GroundContext::uniform(3, 3), 2);
    Hypergraph empty = build_kneser(KneserInstance(pairs3, 4, Variant::without_multiplicities));
    CHECK(empty.edge_count() == 0); // no 4-subsets of 3 vertices
}

TEST_CASE("enumeration cap reports a capacity error") {
    SetSystem singles = SetSystem::binomial(GroundContext::uniform(10, 2), 1);
    KneserInstance inst(singles, 3, Variant::with_multiplicities);
    CHECK_THROWS_AS(build_kneser(inst, 10), capacity_error);
}

TEST_CASE("complete hypergraph edge counts") {
    CHECK(complete_hypergraph(3, 3, true).edge_count() == 7);
    CHECK(complete_hypergraph(4, 3, false).edge_count() == 4);
    CHECK(complete_hypergraph(2, 4, true).edge_count() == 3); // (3,1),(2,2),(1,3)

    for (int n = 1; n <= 6; ++n) {
        for (int r = 2; r <= 5; ++r) {
            const long long multi =
                static_cast<long long>(binomial(n + r - 1, r)) - n;
            CHECK(complete_hypergraph(n, r, true).edge_count() == multi);
            CHECK(complete_hypergraph(n, r, false).edge_count() ==
                  static_cast<long long>(binomial(n, r)));
        }
    }
}

TEST_CASE("complete hypergraphs are the singleton-system kneser hypergraphs") {
    for (int n = 1; n <= 6; ++n) {
        for (int r = 2; r <= 5; ++r) {
            SetSystem singles = SetSystem::binomial(GroundContext::uniform(n, r - 1), 1);
            Hypergraph KG = build_kneser(KneserInstance(singles, r, Variant::with_multiplicities));
            Hypergraph kg = build_kneser(KneserInstance(singles, r, Variant::without_multiplicities));
            CHECK(KG.edges() == complete_hypergraph(n, r, true).edges());
            CHECK(kg.edges() == complete_hypergraph(n, r, false).edges());
        }
    }
}

TEST_CASE("support of multiset edges") {
    CHECK(support(edge_of({2, 1, 0})) == std::vector<int>{1, 2});
    CHECK(support(edge_of({0, 1, 0, 0, 1})) == std::vector<int>{2, 5});
    CHECK(support(edge_of({1, 0, 3})) == std::vector<int>{1, 3});
}

TEST_CASE("up-monotone closure examples") {
    Hypergraph h(3, 2, false, {MultisetEdge({1, 1, 0})});
    Hypergraph closed = up_monotone_closure(h, 3);
    std::vector<MultisetEdge> expected = {
        edge_of({1, 1, 1}), edge_of({1, 2, 0}), edge_of({2, 1, 0})};
    std::sort(expected.begin(), expected.end());
    CHECK(closed.edges() == expected);

    // closure is idempotent
    CHECK(up_monotone_closure(closed, 3).edges() == closed.edges());

    Hypergraph triple(4, 3, false, {MultisetEdge({1, 1, 1, 0})});
    CHECK(up_monotone_closure(triple, 3).edges() ==
          std::vector<MultisetEdge>{edge_of({1, 1, 1, 0})});

    CHECK_THROWS_AS(up_monotone_closure(triple, 2), input_error);

    std::vector<int> wide(30, 0);
    wide[0] = wide[1] = 1;
    Hypergraph big(30, 2, false, {MultisetEdge(wide)});
    CHECK_THROWS_AS(up_monotone_closure(big, 12), capacity_error);
}

TEST_CASE("hypergraph constructor enforces uniformity and loop-freeness") {
    CHECK_THROWS_AS(Hypergraph(3, 3, true, {edge_of({3, 0, 0})}), input_error);
    CHECK_THROWS_AS(Hypergraph(3, 3, true, {edge_of({1, 1, 0})}), input_error);
    CHECK_THROWS_AS(Hypergraph(3, 3, false, {edge_of({2, 1, 0})}), input_error);
    // duplicate edges collapse
    Hypergraph h(3, 3, true, {edge_of({2, 1, 0}), edge_of({2, 1, 0})});
    CHECK(h.edge_count() == 1);
}

TEST_CASE("monotonicity in s and the subhypergraph law", "[property]") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 4)(rng);
        const int r = std::uniform_int_distribution<int>(2, 4)(rng);
        std::vector<int> s(static_cast<size_t>(n)), s_up(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            s[static_cast<size_t>(i)] =
                std::uniform_int_distribution<int>(1, r - 1)(rng);
            s_up[static_cast<size_t>(i)] = std::uniform_int_distribution<int>(
                s[static_cast<size_t>(i)], r - 1)(rng);
        }
        GroundContext lo(n, s), hi(n, s_up);
        SetSystem sys = testutil::random_system(rng, lo, 5);
        SetSystem sys_hi(hi, sys.members());

        Hypergraph KG_lo = build_kneser(KneserInstance(sys, r, Variant::with_multiplicities));
        Hypergraph KG_hi = build_kneser(KneserInstance(sys_hi, r, Variant::with_multiplicities));
        for (const MultisetEdge& e : KG_lo.edges()) CHECK(KG_hi.has_edge(e));

        // kg edges are exactly the set edges of KG
        Hypergraph kg = build_kneser(KneserInstance(sys, r, Variant::without_multiplicities));
        std::vector<MultisetEdge> set_edges;
        for (const MultisetEdge& e : KG_lo.edges()) {
            if (e.is_set_edge()) set_edges.push_back(e);
        }
        CHECK(kg.edges() == set_edges);
    }
}

TEST_CASE("variants coincide at s identically one", "[property]") {
    std::mt19937 rng(7131);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        const int r = std::uniform_int_distribution<int>(2, 4)(rng);
        GroundContext g = GroundContext::uniform(n, 1);
        SetSystem sys = testutil::random_system(rng, g, 6);
        Hypergraph KG = build_kneser(KneserInstance(sys, r, Variant::with_multiplicities));
        Hypergraph kg = build_kneser(KneserInstance(sys, r, Variant::without_multiplicities));
        CHECK(KG.edges() == kg.edges());
    }
}

TEST_CASE("edge oracle agrees with enumeration", "[property]") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        GroundContext g = testutil::random_ground(rng, 5, 4);
        SetSystem sys = testutil::random_system(rng, g, 6);
        const int r = std::uniform_int_distribution<int>(2, 4)(rng);
        for (Variant variant : {Variant::with_multiplicities,
                                Variant::without_multiplicities}) {
            if (variant == Variant::with_multiplicities) {
                bool valid = true;
                for (int si : g.s()) valid = valid && si < r;
                if (!valid) continue;
            }
            KneserInstance inst(sys, r, variant);
            Hypergraph built = build_kneser(inst);
            if (sys.size() == 0) {
                CHECK(built.edge_count() == 0);
                continue;
            }
            // candidates: every loop-free r-multiset over the vertices
            Hypergraph candidates = complete_hypergraph(sys.size(), r, true);
            for (const MultisetEdge& cand : candidates.edges()) {
                CHECK(is_kneser_edge(inst, cand) == built.has_edge(cand));
            }
        }
    }
}
