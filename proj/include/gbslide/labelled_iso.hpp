#pragma once

#include <optional>
#include <vector>

#include "gbslide/serre_graph.hpp"

namespace gbslide {

// A label- and incidence-preserving isomorphism. emap[p] is the image pair of
// p together with whether the canonical orientation flips.
struct LabelledIso {
    std::vector<int> vmap;
    std::vector<Dart> emap;
};

// Finds an isomorphism g1 -> g2 respecting the given vertex and edge-pair
// labels, or nullopt. Degree/label partition refinement followed by
// backtracking; deterministic for fixed input ordering.
std::optional<LabelledIso> labelled_iso(const SerreGraph& g1,
                                        const std::vector<long long>& vlabel1,
                                        const std::vector<long long>& elabel1,
                                        const SerreGraph& g2,
                                        const std::vector<long long>& vlabel2,
                                        const std::vector<long long>& elabel2);

} // namespace gbslide
