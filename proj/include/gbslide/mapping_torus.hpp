#pragma once

#include "gbslide/numbered_graph.hpp"
#include "gbslide/serre_graph.hpp"

namespace gbslide {

// Numbered graph of the mapping torus of a finite-order graph automorphism:
// after subdividing inverted edges, with m the order of f, one vertex per
// vertex orbit and one edge pair per edge orbit, labelled m / orbit size.
// Output ids are the smallest member ids of the orbits.
NumberedGraph mapping_torus(const GraphAutomorphism& f);

// Two m-circuits (inner vertices v_i, outer w_i) with the inner circuit
// stepping i -> i+step, plus r parallel "cage" edges v_i -- w_i; the rotation
// automorphism sends i -> i+1 and cycles each cage, so it has order m*r.
// Requires m >= 3, r >= 2, gcd(m, r) = 1, gcd(step, m) = 1.
GraphAutomorphism cage_graph(long m, long r, long step = 1);

// m-fold cyclic cover of the M-loop rose: an m-cycle with M-1 extra loops at
// each vertex, with the free rotation of order m. Rank of the fundamental
// group is m*(M-1) + 1.
GraphAutomorphism rose_cyclic_cover(long M, long m);

// mapping_torus(f) == mapping_torus(f^k) for k coprime to the order of f;
// requires the gcd condition and always returns true.
bool coprime_power_check(const GraphAutomorphism& f, long k);

// Fixtures.
NumberedGraph fig1a();
NumberedGraph fig1b();
NumberedGraph klein();

} // namespace gbslide
