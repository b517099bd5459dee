#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "curvecliff/analysis.hpp"
#include "curvecliff/connectivity.hpp"
#include "curvecliff/generators.hpp"
#include "oracles.hpp"

using namespace curvecliff;

namespace {

CurveGraph threecon() { return gen_threecon({2, 2, 2, 2, 2, 2}); }

CurveGraph chain_ones(int n) { return gen_chain(std::vector<Int>(static_cast<size_t>(n), 1)).graph; }

CurveGraph random_curve(std::uint64_t seed, int max_v) {
    int n = 2 + static_cast<int>(seed % static_cast<std::uint64_t>(max_v - 1));
    Int budget = n - 1 + static_cast<Int>((seed / 7) % 6);
    return gen_random(seed, n, budget, 1, 3);
}

}  // namespace

TEST_CASE("chains are exactly 1-connected") {
    for (int n = 2; n <= 8; ++n) {
        ConnectivityReport r = connectivity_number(chain_ones(n));
        CHECK_FALSE(r.infinite);
        CHECK(r.m == 1);
    }
}

TEST_CASE("the six-component example is 3- but not 4-connected") {
    CurveGraph tc = threecon();
    ConnectivityReport r = connectivity_number(tc);
    CHECK(r.m == 3);
    CHECK(is_m_connected(tc, 3));
    CHECK_FALSE(is_m_connected(tc, 4));

    REQUIRE(r.all_min_decompositions);
    CHECK(r.all_min_decompositions->size() == 7);
    // the interesting minimum cut with two positive-genus sides is listed
    bool found = false;
    for (const Decomposition& d : *r.all_min_decompositions) {
        if (d.part_a.members == std::vector<int>{0, 4, 5} &&
            d.part_b.members == std::vector<int>{1, 2, 3}) {
            found = true;
        }
    }
    CHECK(found);
    // canonical witness: lexicographically smallest B-membership vector
    REQUIRE(r.witness);
    CHECK(r.witness->part_b.members == std::vector<int>{5});
    CHECK(intersection_product(tc, *r.witness) == 3);
}

TEST_CASE("two components joined at m nodes are exactly m-connected") {
    for (Int m = 1; m <= 6; ++m) {
        for (Int g1 = 1; g1 <= 3; ++g1) {
            CurveGraph g = gen_two_component(g1, 2, m, false);
            CHECK(connectivity_number(g).m == m);
        }
    }
}

TEST_CASE("irreducible curves have infinite connectivity") {
    CurveGraph single({{0, 5, 0}}, {});
    ConnectivityReport r = connectivity_number(single);
    CHECK(r.infinite);
    CHECK_FALSE(r.witness);
    CHECK(is_m_connected(single, 1));
    CHECK(is_m_connected(single, 100));
}

TEST_CASE("complete graph on four unit-multiplicity vertices") {
    std::vector<ComponentRecord> comps;
    for (int i = 0; i < 4; ++i) comps.push_back({i, 1, 0});
    std::vector<EdgeRecord> edges;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) edges.push_back({a, b, 1});
    }
    CurveGraph k4(std::move(comps), std::move(edges));
    CHECK(min_cut_bruteforce(k4).m == 3);
    CHECK(connectivity_number(k4).m == 3);
}

TEST_CASE("minimum cut equals the brute-force oracle, witness included") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        CurveGraph g = random_curve(seed, 9);
        ConnectivityReport fast = connectivity_number(g);
        ConnectivityReport slow = min_cut_bruteforce(g);
        REQUIRE(fast.m == slow.m);
        REQUIRE(fast.witness);
        REQUIRE(slow.witness);
        CHECK(fast.witness->part_a.members == slow.witness->part_a.members);
        CHECK(fast.witness->part_b.members == slow.witness->part_b.members);
        CHECK(intersection_product(g, *fast.witness) == fast.m);
        REQUIRE(fast.all_min_decompositions);
        for (const Decomposition& d : *fast.all_min_decompositions) {
            CHECK(intersection_product(g, d) == fast.m);
        }
    }
}

TEST_CASE("adding an edge or contracting a node bundle never lowers m") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        CurveGraph g = random_curve(seed, 8);
        Int m = connectivity_number(g).m;

        std::vector<EdgeRecord> extended = g.edges();
        int n = g.num_components();
        int a = static_cast<int>(seed % static_cast<std::uint64_t>(n));
        int b = (a + 1 + static_cast<int>((seed / 3) % static_cast<std::uint64_t>(n - 1))) % n;
        if (a != b) {
            extended.push_back({std::min(a, b), std::max(a, b), 1});
            CurveGraph bigger(g.components(), std::move(extended));
            CHECK(connectivity_number(bigger).m >= m);
        }

        const EdgeRecord& e = g.edges()[seed % g.edges().size()];
        CurveGraph contracted = oracles::contract_pair(g, e.a, e.b);
        if (contracted.num_components() >= 2) {
            CHECK(connectivity_number(contracted).m >= m);
        }
    }
}

TEST_CASE("m equals 1 exactly when a single node separates") {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        CurveGraph g = random_curve(seed, 8);
        bool bridge = oracles::has_separating_single_node(g);
        CHECK((connectivity_number(g).m == 1) == bridge);
    }
}

TEST_CASE("connectivity reports are byte-identical across runs") {
    CurveGraph g = random_curve(17, 9);
    AnalysisReport r1 = analyze(g, {});
    AnalysisReport r2 = analyze(g, {});
    CHECK(render_structured(r1) == render_structured(r2));
}

TEST_CASE("disconnected input is rejected") {
    CurveGraph g({{0, 1, 0}, {1, 1, 0}}, {});
    CHECK_THROWS_AS(connectivity_number(g), CurveError);
    CHECK_THROWS_AS(canonical_geometry(g), CurveError);
}

TEST_CASE("brute force refuses oversized inputs") {
    CurveGraph g = gen_random(3, 12, 14, 1, 2);
    ConnectivityOptions opts;
    opts.enumeration_guard = 10;
    CHECK_THROWS_AS(min_cut_bruteforce(g, opts), GuardError);
}

TEST_CASE("canonical geometry of a chain of three elliptic components") {
    CurveGraph g = chain_ones(3);
    CanonicalGeometry geo = canonical_geometry(g);
    CHECK_FALSE(geo.base_point_free);
    CHECK(geo.very_ample == TriBool::No);
    CHECK(geo.base_point_witnesses.size() == 2);  // one per separating node
    for (const Decomposition& d : geo.base_point_witnesses) {
        CHECK(intersection_product(g, d) == 1);
    }
}

TEST_CASE("canonical geometry of the three-connected example") {
    CanonicalGeometry geo = canonical_geometry(threecon());
    CHECK(geo.base_point_free);
    // six components cannot carry a finite double cover, so the
    // hyperelliptic obstruction is settled structurally
    CHECK(geo.very_ample == TriBool::Yes);
    CHECK(geo.base_point_witnesses.empty());
    CHECK(geo.separation_failures.empty());
}

TEST_CASE("2-connected but 3-disconnected curves are not very ample") {
    CurveGraph g = gen_two_component(2, 2, 2, false);
    CanonicalGeometry geo = canonical_geometry(g);
    CHECK(geo.base_point_free);
    CHECK(geo.very_ample == TriBool::No);
    CHECK(geo.separation_failures.size() == 1);
}

TEST_CASE("very ampleness is three-valued when hyperellipticity is open") {
    CurveGraph g({{0, 5, 0}}, {});  // irreducible genus 5, nothing asserted
    CanonicalGeometry geo = canonical_geometry(g);
    CHECK(geo.base_point_free);
    CHECK(geo.very_ample == TriBool::Unknown);

    ComponentRecord c{0, 5, 0};
    c.set_flag(ComponentFlag::HonestlyHyperelliptic);
    CanonicalGeometry hh = canonical_geometry(CurveGraph({c}, {}));
    CHECK(hh.very_ample == TriBool::No);

    ComponentRecord b{0, 5, 0};
    b.set_flag(ComponentFlag::BrillNoetherGeneral);
    CanonicalGeometry bng = canonical_geometry(CurveGraph({b}, {}));
    CHECK(bng.very_ample == TriBool::Yes);
}

TEST_CASE("canonical geometry needs pa at least 2") {
    CurveGraph g({{0, 1, 0}}, {});
    CHECK_THROWS_AS(canonical_geometry(g), CurveError);
}

TEST_CASE("hyperellipticity status derivations") {
    CHECK(honestly_hyperelliptic_status(threecon()) == TriBool::No);
    CHECK(honestly_hyperelliptic_status(gen_two_component(1, 1, 3, false)) == TriBool::No);
    CHECK(honestly_hyperelliptic_status(CurveGraph({{0, 2, 0}}, {})) == TriBool::Yes);
    CHECK(honestly_hyperelliptic_status(CurveGraph({{0, 9, 0}}, {})) == TriBool::Unknown);
}
