#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gbslide/numbered_graph.hpp"
#include "gbslide/tagged_poset.hpp"

namespace gbslide {

// Replayable isomorphism certificate. The pipeline it encodes:
//   source --source_collapses--> reduced source --moves--> X
//   target --target_collapses--> reduced target
// with X equal to the reduced target under vertex_bijection (labelled-graph
// equality, not merely isomorphism). Moves address edge pairs of the reduced
// source by index; slides never renumber pairs, so indices stay valid along
// the whole sequence. state_hashes[i] is the graph hash after move i.
struct SlideSequence {
    NumberedGraph source;
    NumberedGraph target;
    std::vector<CollapseStep> source_collapses;
    std::vector<CollapseStep> target_collapses;
    std::vector<SlideMove> moves;
    std::vector<std::uint64_t> state_hashes;
    std::vector<int> vertex_bijection; // reduced-source vertex -> reduced-target vertex
    std::vector<Dart> edge_bijection;  // reduced-source pair -> reduced-target dart
};

// Slides the edges of a single-label connected component onto a chosen anchor
// vertex: afterwards every component edge has the anchor as an endpoint and
// all other component vertices are leaves (extra parallels become loops at
// the anchor). component_pairs must all carry one label and span a connected
// subgraph containing the anchor.
SlideSequence octopus_normal_form(const NumberedGraph& g,
                                  const std::vector<int>& component_pairs, int anchor);

// Realizes a data-preserving poset isomorphism as an explicit slide sequence
// from g1 to g2 (both reduced and connected). poset_iso maps element indices
// of associated_poset(g1) to those of associated_poset(g2). Internal
// consistency failures signal a non-isomorphism bug upstream and throw
// InternalError.
SlideSequence synthesize_slides(const NumberedGraph& g1, const NumberedGraph& g2,
                                const std::vector<int>& poset_iso);

// Replays collapses and moves, validating every precondition; returns the
// final graph. Throws on any violation (invalid certificate).
NumberedGraph apply_sequence(const NumberedGraph& g, const SlideSequence& seq);

// Full witness replay: apply_sequence on the source, target collapses on the
// target, then labelled equality under the recorded bijection. Shares no
// state with synthesis.
bool verify_certificate(const SlideSequence& seq);

struct IsoDecision {
    bool isomorphic = false;
    std::optional<SlideSequence> certificate;
};

// Top-level decision: reduce both graphs, compare associated posets, and when
// they match synthesize and verify a certificate connecting the originals.
IsoDecision slide_equivalent(const NumberedGraph& g1, const NumberedGraph& g2);

struct SlideClass {
    std::vector<NumberedGraph> reps; // one per labelled-isomorphism class
    bool truncated = false;
};

// BFS over all legal slides from a reduced graph, deduplicated by labelled
// isomorphism; stops once cap classes have been found.
SlideClass enumerate_slide_class(const NumberedGraph& g, int cap);

// All legal slide moves available on g, in deterministic order.
std::vector<SlideMove> legal_slides(const NumberedGraph& g);

} // namespace gbslide
