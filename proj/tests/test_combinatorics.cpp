#include <numbers>

#include "doctest.h"
#include "gainspec/combinatorics.hpp"
#include "gainspec/enumerate.hpp"
#include "gainspec/generators.hpp"
#include "oracles.hpp"

using namespace gainspec;

TEST_CASE("matching and vertex cover match brute force on small corpora") {
    for (const SimpleGraph& g : enumerate_all_graphs(6)) {
        CHECK(matching_number(g) == oracle::matching_brute(g));
        CHECK(vertex_cover_number(g) == oracle::vertex_cover_brute(g));
    }
}

TEST_CASE("matching handles blossoms") {
    // Two triangles joined by a bridge: mu = 3 needs odd-cycle handling.
    SimpleGraph g(6);
    g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(0, 2);
    g.add_edge(3, 4); g.add_edge(4, 5); g.add_edge(3, 5);
    g.add_edge(2, 3);
    CHECK(matching_number(g) == 3);
    CHECK(vertex_cover_number(g) == 4);
    // Petersen graph: mu = 5, tau = 6.
    SimpleGraph pet(10);
    for (int v = 0; v < 5; ++v) {
        pet.add_edge(v, (v + 1) % 5);
        pet.add_edge(v, v + 5);
        pet.add_edge(v + 5, (v + 2) % 5 + 5);
    }
    CHECK(matching_number(pet) == 5);
    CHECK(vertex_cover_number(pet) == 6);
}

TEST_CASE("cycle enumeration agrees with the arrangement oracle") {
    for (const SimpleGraph& g : enumerate_all_graphs(6)) {
        int odd = 0, even = 0;
        enumerate_simple_cycles(g, [&](const std::vector<int>& c) {
            (c.size() % 2 ? odd : even) += 1;
        });
        const auto [odd_ref, even_ref] = oracle::cycle_counts_brute(g);
        CHECK(odd == odd_ref);
        CHECK(even == even_ref);
    }
    CHECK(odd_cycle_count(make_complete(4)) == 4);     // the 4 triangles
    CHECK(odd_cycle_count(make_complete(5)) == 10 + 12);  // C_3s + C_5s
    CHECK_THROWS_AS(odd_cycle_count(SimpleGraph(17)), CapExceeded);
}

TEST_CASE("bipartite obstruction and the acyclic-deletion maximum") {
    CHECK(bipartite_obstruction(make_complete_bipartite(3, 4)) == 0);
    CHECK(bipartite_obstruction(make_cycle(5, 0.0)) == 1);
    CHECK(bipartite_obstruction(make_complete(4)) == 2);
    CHECK(bipartite_obstruction(make_complete(6)) == 4);

    // C_4: drop one vertex -> P_3, mu = 1; rank(C_4 balanced) = 2 = 2*1.
    CHECK(max_acyclic_deletion_matching(make_cycle(4, 0.0)) == 1);
    // Trees: dropping nothing is allowed, so the maximum is mu itself.
    CHECK(max_acyclic_deletion_matching(make_path(6)) == 3);
    CHECK(max_acyclic_deletion_matching(make_star(5)) == 1);
}

TEST_CASE("fundamental cycles: count, gains, and the switching criterion") {
    const GainGraph g = random_gains(make_complete(5), 77);
    const auto basis = fundamental_cycles(g);
    // m - n + c independent cycles.
    CHECK(static_cast<int>(basis.cycles.size()) == 10 - 5 + 1);
    CHECK(static_cast<int>(basis.tree_edges.size()) == 4);

    // Switching preserves all fundamental-cycle gains.
    std::vector<UnitComplex> s;
    for (int v = 0; v < 5; ++v) s.push_back(UnitComplex::from_angle(0.31 * (v + 1)));
    const GainGraph sw = switch_gains(g, SwitchingFunction(s));
    CHECK(switching_equivalent(g, sw));
    // Perturbing one gain beyond tolerance breaks equivalence.
    std::vector<GainEdge> edges = sw.edges();
    edges[0].gain = edges[0].gain * UnitComplex::from_angle(1e-3);
    CHECK_FALSE(switching_equivalent(g, GainGraph(5, std::move(edges))));
    CHECK_THROWS_AS(switching_equivalent(g, make_path(5)), std::invalid_argument);
}

TEST_CASE("balance and antibalance") {
    CHECK(is_balanced(make_cycle(6, 0.0)));
    CHECK_FALSE(is_balanced(make_cycle(6, std::numbers::pi)));
    // Antibalance asks every cycle gain to be (-1)^length: for even cycles
    // that coincides with balance, for odd cycles it means gain -1.
    CHECK(is_antibalanced(make_cycle(6, 0.0)));
    CHECK(is_antibalanced(make_cycle(5, std::numbers::pi)));
    CHECK_FALSE(is_antibalanced(make_cycle(5, 0.0)));
    CHECK(is_balanced(assign_gains(make_path(7), GainScheme::UniformCircle, 3)));  // trees
    CHECK(is_balanced(make_complete_bipartite(3, 3)));
    // Balanced iff switching-equivalent to all-one gains.
    std::vector<UnitComplex> s;
    for (int v = 0; v < 4; ++v) s.push_back(UnitComplex::from_angle(0.2 + v));
    CHECK(is_balanced(switch_gains(make_cycle(4, 0.0), SwitchingFunction(s))));
}

TEST_CASE("structural classification drives the equality classes") {
    const auto k33 = structural_class(make_complete_bipartite(3, 3));
    CHECK(k33.equality_class_matching);
    CHECK_FALSE(k33.equality_class_cover);

    const auto star = structural_class(make_star(4));
    CHECK(star.equality_class_cover);
    CHECK_FALSE(star.equality_class_matching);

    // Two disjoint balanced K_{1,4}: cover class, not matching class.
    std::vector<GainEdge> edges;
    for (int leaf = 1; leaf <= 4; ++leaf) {
        edges.push_back({0, leaf, UnitComplex::one()});
        edges.push_back({5, 5 + leaf, UnitComplex::one()});
    }
    const GainGraph two_stars(10, std::move(edges));
    CHECK(structural_class(two_stars).equality_class_cover);
    CHECK_FALSE(structural_class(two_stars).equality_class_matching);

    // K_{1,1} is both a balanced K_{p,p} and a star of its own Delta.
    const GainGraph k2(2, {{0, 1, UnitComplex::i()}});
    CHECK(structural_class(k2).equality_class_matching);
    CHECK(structural_class(k2).equality_class_cover);

    // Unbalanced C_4 = K_{2,2} with a non-trivial cycle gain: neither.
    CHECK_FALSE(structural_class(make_cycle(4, 1.0)).equality_class_matching);
}

TEST_CASE("enumeration counts and filters") {
    const std::vector<int> all_expect = {0, 1, 2, 4, 11, 34, 156, 1044};
    int per_n[8] = {0};
    for (const SimpleGraph& g : enumerate_all_graphs(7)) per_n[g.n]++;
    for (int n = 1; n <= 7; ++n) CHECK(per_n[n] == all_expect[n]);

    const std::vector<int> conn_expect = {0, 1, 1, 2, 6, 21, 112, 853};
    CorpusSpec spec;
    spec.n_max = 7;
    int conn_n[8] = {0};
    for (const SimpleGraph& g : enumerate_underlying(spec)) conn_n[g.n]++;
    for (int n = 1; n <= 7; ++n) CHECK(conn_n[n] == conn_expect[n]);

    // Connected bipartite graphs on 4 vertices: P_4, K_{1,3}, C_4.
    spec.n_min = 4;
    spec.n_max = 4;
    spec.bipartite_only = true;
    CHECK(enumerate_underlying(spec).size() == 3);

    CHECK(isomorphic(make_cycle(4, 0.0).underlying(),
                     make_complete_bipartite(2, 2).underlying()));
    CHECK_FALSE(isomorphic(make_path(4).underlying(), make_star(3).underlying()));
    CHECK_THROWS_AS(enumerate_all_graphs(10), CapExceeded);
}
