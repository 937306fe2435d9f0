#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gbslide/group_structure.hpp"
#include "gbslide/mapping_torus.hpp"

using namespace gbslide;

TEST_CASE("identity on the rank-2 rose") {
    SerreGraph rose;
    rose.add_vertex("v");
    rose.add_edge("x", 0, 0);
    rose.add_edge("y", 0, 0);
    GraphAutomorphism id(rose, {0}, {Dart{0, false}, Dart{1, false}});
    NumberedGraph torus = mapping_torus(id);
    CHECK(torus.vertex_count() == 1);
    CHECK(torus.pair_count() == 2);
    CHECK(torus.vertex_label(0) == 1);
    CHECK(torus.edge_label(0) == 1);
    CHECK(torus.edge_label(1) == 1);
}

TEST_CASE("cage(5,2) mapping torus") {
    NumberedGraph torus = mapping_torus(cage_graph(5, 2));
    NumberedGraph expected = make_numbered_graph(
        {{"v0", 2}, {"w0", 2}},
        {{"in0", "v0", "v0", 2}, {"out0", "w0", "w0", 2}, {"c0_0", "v0", "w0", 1}});
    CHECK(torus == expected);
}

TEST_CASE("cage parameter validation") {
    CHECK_THROWS_AS(cage_graph(4, 2, 1), InputError); // gcd(4,2) != 1
    CHECK_THROWS_AS(cage_graph(2, 3, 1), InputError); // m < 3
    CHECK_THROWS_AS(cage_graph(5, 1, 1), InputError); // r < 2
    CHECK_THROWS_AS(cage_graph(6, 5, 2), InputError); // gcd(step, m) != 1
}

TEST_CASE("cage fixture of the labelled-vertices figure") {
    GraphAutomorphism f = cage_graph(5, 3, 1);
    CHECK(f.base().vertex_count() == 10);
    CHECK(f.base().pair_count() == 5 + 5 + 15);
    CHECK(aut_order(f) == 15);
    CHECK(betti(f.base()) == 16); // rank of the fiber group, m*r + 1
}

TEST_CASE("twisted cages give the same mapping torus") {
    CHECK(mapping_torus(cage_graph(5, 2, 1)) == mapping_torus(cage_graph(5, 2, 2)));
    CHECK(mapping_torus(cage_graph(5, 3, 1)) == mapping_torus(cage_graph(5, 3, 2)));
}

TEST_CASE("coprime powers give the same mapping torus") {
    for (auto [m, r] : {std::pair<long, long>{5, 2}, {5, 3}}) {
        GraphAutomorphism f = cage_graph(m, r);
        long order = aut_order(f);
        for (long k = 1; k < order; ++k)
            if (std::gcd(k, order) == 1) CHECK(coprime_power_check(f, k));
    }
    GraphAutomorphism rc = rose_cyclic_cover(3, 4);
    long order = aut_order(rc);
    CHECK(order == 4);
    for (long k = 1; k < order; ++k)
        if (std::gcd(k, order) == 1) CHECK(coprime_power_check(rc, k));

    CHECK_THROWS_AS(coprime_power_check(cage_graph(5, 2), 5), InputError);
    CHECK(coprime_power_check(cage_graph(5, 2), 1));
}

TEST_CASE("rose cyclic cover") {
    GraphAutomorphism f = rose_cyclic_cover(2, 3);
    CHECK(f.base().vertex_count() == 3);
    CHECK(f.base().pair_count() == 6); // 3-cycle plus one loop per vertex
    CHECK(betti(f.base()) == 4);       // rank m(M-1)+1
    CHECK(aut_order(f) == 3);

    // m = 1 degenerates to the rose itself with the identity.
    GraphAutomorphism one = rose_cyclic_cover(3, 1);
    CHECK(one.base().vertex_count() == 1);
    CHECK(one.base().pair_count() == 3);
    CHECK(aut_order(one) == 1);

    // Free actions produce all-ones roses.
    for (auto [M, m] : {std::pair<long, long>{2, 3}, {3, 4}, {4, 5}}) {
        NumberedGraph torus = mapping_torus(rose_cyclic_cover(M, m));
        CHECK(torus.vertex_count() == 1);
        CHECK(torus.pair_count() == M);
        for (int p = 0; p < torus.pair_count(); ++p) CHECK(torus.edge_label(p) == 1);
        CHECK(torus.vertex_label(0) == 1);
    }
}

TEST_CASE("divisibility and orbit sums") {
    for (GraphAutomorphism f : {cage_graph(5, 2), cage_graph(5, 3, 2), rose_cyclic_cover(3, 4)}) {
        NumberedGraph torus = mapping_torus(f);
        long m = aut_order(f);
        long long vertex_sum = 0, edge_sum = 0;
        for (int v = 0; v < torus.vertex_count(); ++v) vertex_sum += m / torus.vertex_label(v);
        for (int p = 0; p < torus.pair_count(); ++p) edge_sum += m / torus.edge_label(p);
        CHECK(vertex_sum == f.base().vertex_count());
        CHECK(edge_sum == f.base().pair_count());
        // Fiber-rank identity: 1 - m*chi equals the rank of the fiber.
        Rational chi = rational_euler_char(torus);
        Rational n = Rational(1) - Rational(m) * chi;
        CHECK(n.is_integer());
        CHECK(n.num == betti(f.base()));
    }
}

TEST_CASE("mapping torus with an edge inversion subdivides first") {
    // Reflection of a single edge: the quotient is a single subdivided half
    // with labels 1 (midpoint orbit) and 2 at the reflected ends.
    SerreGraph seg;
    seg.add_vertex("a");
    seg.add_vertex("b");
    seg.add_edge("e", 0, 1);
    GraphAutomorphism refl(seg, {1, 0}, {Dart{0, true}});
    NumberedGraph torus = mapping_torus(refl);
    CHECK(torus.vertex_count() == 2);
    CHECK(torus.pair_count() == 1);
    // Vertex orbit {a, b} has size 2 and label 1; the midpoint is fixed with
    // label 2; the half-edge orbit has size 2 and label 1.
    int mid = torus.graph().find_vertex("e.mid");
    REQUIRE(mid >= 0);
    CHECK(torus.vertex_label(mid) == 2);
    CHECK(torus.edge_label(0) == 1);
}
