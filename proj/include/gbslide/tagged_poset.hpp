#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gbslide/numbered_graph.hpp"

namespace gbslide {

// Element of the poset attached to a numbered graph: a connected component of
// the level-k subgraph (vertices and edges with label divisible by k),
// carrying its level, its first Betti number as tag, and the component itself
// as provenance. Provenance is excluded from isomorphism semantics.
struct PosetElement {
    long long level = 1;
    int tag = 0;
    Subgraph component;
    int index_in_level = 1; // 1-based, ordered by smallest vertex

    std::string id() const {
        return std::to_string(level) + "." + std::to_string(index_in_level);
    }
};

class TaggedPoset {
public:
    std::vector<PosetElement> elements;        // sorted by (level, index)
    std::vector<std::vector<bool>> leq;        // leq[i][j]: element i precedes j

    int size() const { return static_cast<int>(elements.size()); }
    bool strictly_less(int i, int j) const { return i != j && leq[i][j]; }

    // Hasse diagram as (lower, upper) index pairs.
    std::vector<std::pair<int, int>> covers() const;
    std::vector<int> maximal_elements() const;
    // Index of the unique minimum, -1 if there is none.
    int minimum() const;
};

// Levels range over divisors of vertex labels; every other level subgraph is
// empty because edge labels divide vertex labels.
TaggedPoset associated_poset(const NumberedGraph& g);

// Bijection preserving order both ways, level, and tag; indices into
// p1.elements mapped to indices into p2.elements. Deterministic.
std::optional<std::vector<int>> data_preserving_iso(const TaggedPoset& p1, const TaggedPoset& p2);

// Standard Moebius function.
int mobius(long long n);

// Edges labelled exactly l, counted directly and by Moebius inversion over
// the level subgraphs: sum over multiples m of l of e(G_m) * mu(m/l). The two
// always agree.
std::pair<long long, long long> edge_count_by_label(const NumberedGraph& g, long long l);

std::vector<long long> divisors(long long n);

} // namespace gbslide
