#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "kneser/coloring.hpp"
#include "kneser/core.hpp"
#include "kneser/hypergraph.hpp"
#include "kneser/instance.hpp"
#include "test_util.hpp"

using namespace kneser;
using kneser::testutil::edge_of;

namespace {

// Independent oracle: exhaustive search over all assignments (vertex 1
// pinned to color 1, which only fixes the color relabeling).
bool brute_colorable(const Hypergraph& h, int m) {
    const int V = h.vertex_count();
    std::vector<int> color(static_cast<size_t>(V), 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == V) {
            for (const MultisetEdge& e : h.edges()) {
                int first = 0;
                bool mono = true;
                for (int u : support(e)) {
                    int c = color[static_cast<size_t>(u - 1)];
                    if (first == 0) first = c;
                    else if (first != c) { mono = false; break; }
                }
                if (mono) return false;
            }
            return true;
        }
        const int hi = (v == 0) ? 1 : m;
        for (int c = 1; c <= hi; ++c) {
            color[static_cast<size_t>(v)] = c;
            if (rec(v + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

int brute_chi(const Hypergraph& h) {
    if (h.vertex_count() == 0) return 0;
    for (int m = 1; m <= h.vertex_count(); ++m) {
        if (brute_colorable(h, m)) return m;
    }
    return h.vertex_count();
}

SetSystem pair_system(int n, int s) {
    return SetSystem::binomial(GroundContext::uniform(n, s), 2);
}

} // namespace

TEST_CASE("verify_coloring flags monochromatic edges") {
    Hypergraph K33 = complete_hypergraph(3, 3, true);
    Coloring all_one{1, {1, 1, 1}};
    ColoringVerdict bad = verify_coloring(K33, all_one);
    CHECK_FALSE(bad.proper);
    REQUIRE(bad.violation.has_value());
    CHECK(K33.has_edge(*bad.violation));

    CHECK_THROWS_AS(verify_coloring(K33, Coloring{1, {1, 1}}), input_error);

    Hypergraph edgeless(4, 3, true, {});
    CHECK(verify_coloring(edgeless, Coloring{2, {1, 2, 1, 2}}).proper);
}

TEST_CASE("star and triangle classes two-color kg^4_3 of the pairs of [4]") {
    // vertex order 12,13,14,23,24,34: triangle on {1,2,3}, star at 4
    KneserInstance kg(pair_system(4, 3), 4, Variant::without_multiplicities);
    Coloring coloring{2, {1, 1, 2, 1, 2, 2}};
    CHECK(verify_coloring(kg, coloring).proper);
    CHECK(verify_coloring(build_kneser(kg), coloring).proper);
}

TEST_CASE("class independence in the multiset pair hypergraph of [4]") {
    KneserInstance KG(pair_system(4, 2), 4, Variant::with_multiplicities);
    Hypergraph built = build_kneser(KG);
    ColorClassOracle implicit_oracle(KG);
    ColorClassOracle explicit_oracle(built);

    const Mask triangle = 0b001011; // {12,13,23}
    const Mask matching = 0b100001; // {12,34}
    for (const ColorClassOracle* oracle : {&implicit_oracle, &explicit_oracle}) {
        CHECK(class_is_independent(*oracle, triangle));
        CHECK_FALSE(class_is_independent(*oracle, matching));
        CHECK(class_is_independent(*oracle, Mask{1} << 2));
    }
}

TEST_CASE("explicit and implicit class oracles agree", "[property]") {
    std::mt19937 rng(90125);
    for (int trial = 0; trial < 30; ++trial) {
        GroundContext g = testutil::random_ground(rng, 4, 3);
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
            ColorClassOracle a(inst), b(built);
            const Mask full = full_mask(sys.size());
            for (Mask cls = 0; cls <= full && sys.size() <= 6; ++cls) {
                CHECK(a.class_independent(cls) == b.class_independent(cls));
                for (int v = 0; v < sys.size(); ++v) {
                    if (!((cls >> v) & 1u)) continue;
                    CHECK(a.class_independent_with(cls, v) ==
                          b.class_independent_with(cls, v));
                }
                // a reported edge really is an edge inside the class
                if (auto witness = a.find_edge_within(cls)) {
                    CHECK(is_kneser_edge(inst, *witness));
                    CHECK((witness->support_mask() & ~cls) == 0);
                    CHECK(built.has_edge(*witness));
                }
            }
            if (sys.size() == 0) break;
        }
    }
}

TEST_CASE("greedy coloring basics") {
    Hypergraph edgeless(5, 3, true, {});
    std::vector<int> natural = {0, 1, 2, 3, 4};
    CHECK(greedy_coloring(edgeless, natural).colors == 1);

    // k^3_3 has the single edge {1,2,3}; K^3_3 pairwise conflicts everywhere
    std::vector<int> order3 = {0, 1, 2};
    CHECK(greedy_coloring(complete_hypergraph(3, 3, false), order3).colors == 2);
    CHECK(greedy_coloring(complete_hypergraph(3, 3, true), order3).colors == 3);

    KneserInstance kg(pair_system(4, 3), 4, Variant::without_multiplicities);
    std::vector<int> order6 = {0, 1, 2, 3, 4, 5};
    Coloring greedy = greedy_coloring(kg, order6);
    CHECK(greedy.colors <= 3);
    CHECK(verify_coloring(kg, greedy).proper);

    CHECK_THROWS_AS(greedy_coloring(edgeless, order3), input_error);
}

TEST_CASE("the explicit pair-system coloring is proper with n-2 colors") {
    for (auto [n, r] : {std::pair{5, 4}, {4, 4}, {6, 5}}) {
        Coloring c = star_coloring_pairs(n, r);
        CHECK(c.colors == n - 2);
        KneserInstance kg(pair_system(n, r - 1), r, Variant::without_multiplicities);
        CHECK(verify_coloring(kg, c).proper);
    }
    // spot values for n=5: c({4,5}) = 3 and c({1,5}) = 1
    Coloring c = star_coloring_pairs(5, 4);
    SetSystem pairs = pair_system(5, 3);
    for (int i = 0; i < pairs.size(); ++i) {
        if (pairs.member(i) == mask_of({4, 5}, 5))
            CHECK(c.assignment[static_cast<size_t>(i)] == 3);
        if (pairs.member(i) == mask_of({1, 5}, 5))
            CHECK(c.assignment[static_cast<size_t>(i)] == 1);
    }
    CHECK_THROWS_AS(star_coloring_pairs(3, 4), input_error);
    CHECK_THROWS_AS(star_coloring_pairs(5, 3), input_error);
}

TEST_CASE("chromatic number conventions and worked instances") {
    Hypergraph empty(0, 2, true, {});
    ChiResult none = chromatic_number(empty);
    CHECK(none.exact);
    CHECK(none.chi == 0);

    Hypergraph edgeless(5, 3, true, {});
    ChiResult one = chromatic_number(edgeless);
    CHECK(one.exact);
    CHECK(one.chi == 1);

    KneserInstance kg42(pair_system(4, 2), 4, Variant::without_multiplicities);
    ChiResult a = chromatic_number(kg42);
    REQUIRE(a.exact);
    CHECK(a.chi == 2);

    KneserInstance KG42(pair_system(4, 2), 4, Variant::with_multiplicities);
    ChiResult b = chromatic_number(KG42);
    REQUIRE(b.exact);
    CHECK(b.chi == 2);

    CHECK(chromatic_number(complete_hypergraph(3, 3, true)).chi == 3);
}

TEST_CASE("solver matches exhaustive enumeration", "[property]") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        const bool multiset = trial % 2 == 0;
        Hypergraph h = testutil::random_hypergraph(rng, 6, 3, multiset, 0.35);
        ChiResult result = chromatic_number(h);
        REQUIRE(result.exact);
        CHECK(result.chi == brute_chi(h));
        REQUIRE(result.witness.has_value());
        CHECK(verify_coloring(h, *result.witness).proper);
        CHECK(result.witness->colors == result.chi);
    }
}

TEST_CASE("greedy sandwich and edge monotonicity", "[property]") {
    std::mt19937 rng(1812);
    for (int trial = 0; trial < 40; ++trial) {
        Hypergraph h = testutil::random_hypergraph(rng, 6, 3, true, 0.4);
        ChiResult exact = chromatic_number(h);
        REQUIRE(exact.exact);

        std::vector<int> natural(static_cast<size_t>(h.vertex_count()));
        for (int v = 0; v < h.vertex_count(); ++v)
            natural[static_cast<size_t>(v)] = v;
        Coloring greedy = greedy_coloring(h, natural);
        CHECK(greedy.colors >= exact.chi);
        CHECK(verify_coloring(h, greedy).proper);

        if (!h.edges().empty()) {
            std::vector<MultisetEdge> fewer = h.edges();
            fewer.erase(fewer.begin() +
                        static_cast<std::ptrdiff_t>(
                            std::uniform_int_distribution<size_t>(
                                0, fewer.size() - 1)(rng)));
            Hypergraph smaller(h.vertex_count(), h.r(), h.multiset_allowed(),
                               std::move(fewer));
            ChiResult less = chromatic_number(smaller);
            REQUIRE(less.exact);
            CHECK(less.chi <= exact.chi);
        }
    }
}

TEST_CASE("kg is never harder to color than KG", "[property]") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 4)(rng);
        const int r = std::uniform_int_distribution<int>(2, 4)(rng);
        std::vector<int> s(static_cast<size_t>(n));
        for (int& si : s) si = std::uniform_int_distribution<int>(1, r - 1)(rng);
        GroundContext g(n, s);
        SetSystem sys = testutil::random_system(rng, g, 6);
        ChiResult kg = chromatic_number(
            KneserInstance(sys, r, Variant::without_multiplicities));
        ChiResult KG = chromatic_number(
            KneserInstance(sys, r, Variant::with_multiplicities));
        REQUIRE(kg.exact);
        REQUIRE(KG.exact);
        CHECK(kg.chi <= KG.chi);
    }
}

TEST_CASE("explicit and implicit solver modes agree", "[property]") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        GroundContext g = testutil::random_ground(rng, 4, 3);
        SetSystem sys = testutil::random_system(rng, g, 6);
        const int r = std::uniform_int_distribution<int>(2, 4)(rng);
        KneserInstance inst(sys, r, Variant::without_multiplicities);
        Hypergraph built = build_kneser(inst);
        ChiResult via_edges = chromatic_number(ColorClassOracle(built));
        ChiResult via_oracle = chromatic_number(ColorClassOracle(inst));
        REQUIRE(via_edges.exact);
        REQUIRE(via_oracle.exact);
        CHECK(via_edges.chi == via_oracle.chi);
    }
}

TEST_CASE("solver runs are deterministic") {
    KneserInstance inst(pair_system(5, 2), 4, Variant::without_multiplicities);
    ChiResult a = chromatic_number(inst);
    ChiResult b = chromatic_number(inst);
    REQUIRE(a.exact);
    REQUIRE(b.exact);
    CHECK(a.chi == b.chi);
    CHECK(a.witness == b.witness);
}

TEST_CASE("exhausted budgets report certified bounds") {
    KneserInstance inst(pair_system(6, 2), 4, Variant::without_multiplicities);
    ChiResult limited = chromatic_number(inst, ChiBudget{0});
    CHECK_FALSE(limited.exact);
    CHECK(limited.lower >= 2);
    CHECK(limited.lower <= limited.upper);
    REQUIRE(limited.witness.has_value());
    CHECK(verify_coloring(inst, *limited.witness).proper);
    CHECK(limited.witness->colors == limited.upper);

    ChiResult full = chromatic_number(inst);
    REQUIRE(full.exact);
    CHECK(limited.lower <= full.chi);
    CHECK(full.chi <= limited.upper);
    CHECK(full.chi == 3); // n - t(n) at n = 6
}
