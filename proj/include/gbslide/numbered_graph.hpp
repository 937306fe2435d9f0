#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gbslide/labelled_iso.hpp"
#include "gbslide/rational.hpp"
#include "gbslide/serre_graph.hpp"

namespace gbslide {

// Connected finite graph with positive integer labels on vertices and edge
// pairs, each edge label dividing both endpoint labels. Encodes a graph of
// finite cyclic groups (orders d) and, through the label ratios, a positive
// GBS structure.
class NumberedGraph {
public:
    NumberedGraph() = default; // empty placeholder, not a valid value

    NumberedGraph(SerreGraph graph, std::vector<long long> vertex_labels,
                  std::vector<long long> edge_labels);

    const SerreGraph& graph() const { return graph_; }
    long long vertex_label(int v) const { return vlabel_[v]; }
    long long edge_label(int p) const { return elabel_[p]; }
    const std::vector<long long>& vertex_labels() const { return vlabel_; }
    const std::vector<long long>& edge_labels() const { return elabel_; }

    int vertex_count() const { return graph_.vertex_count(); }
    int pair_count() const { return graph_.pair_count(); }

    // Exact equality: same ids, labels, and unordered endpoints.
    friend bool operator==(const NumberedGraph& a, const NumberedGraph& b);
    friend bool operator!=(const NumberedGraph& a, const NumberedGraph& b) { return !(a == b); }

private:
    SerreGraph graph_;
    std::vector<long long> vlabel_;
    std::vector<long long> elabel_;

    friend NumberedGraph slide(const NumberedGraph&, struct SlideMove);
};

// Convenience construction from (id, label) vertex rows and
// (id, end, end, label) edge rows; rows are sorted by id first.
NumberedGraph make_numbered_graph(
    std::vector<std::pair<std::string, long long>> vertices,
    std::vector<std::tuple<std::string, std::string, std::string, long long>> edges);

std::optional<LabelledIso> labelled_iso(const NumberedGraph& a, const NumberedGraph& b);

// Equality of underlying labelled graphs under a fixed vertex bijection;
// edge ids are ignored, multiplicities must match.
bool labelled_equal_under(const NumberedGraph& a, const NumberedGraph& b,
                          const std::vector<int>& vmap);

// Slide of the tau end of `moved` from o(along) to tau(along). Legal when the
// two darts lie on distinct pairs, tau(moved) = o(along), and the moved
// edge's label divides the along edge's label.
struct SlideMove {
    Dart moved;
    Dart along;
};

// Throws InputError naming the violated clause.
NumberedGraph slide(const NumberedGraph& g, SlideMove m);

// Every non-loop edge has a label strictly dividing both endpoint labels.
bool is_reduced(const NumberedGraph& g);

struct CollapseStep {
    std::string edge;
    std::string removed_vertex;
    std::string kept_vertex;
};

// Collapses non-loop edges with d_e = d_tau(e), merging tau(e) into o(e) and
// keeping the label of o(e), until reduced. Deterministic: lexicographically
// smallest eligible edge id first, keeping the smaller-named vertex on ties.
std::pair<NumberedGraph, std::vector<CollapseStep>> reduce(const NumberedGraph& g);

// Replays one recorded collapse, validating eligibility.
NumberedGraph apply_collapse(const NumberedGraph& g, const CollapseStep& step);

// Positive GBS structure: per-dart indices delta and a sign per edge pair.
// delta of a dart is the index at its tau end.
struct LabeledGbs {
    SerreGraph graph;
    std::vector<long long> delta_to;   // delta of the canonical dart
    std::vector<long long> delta_from; // delta of the reversed dart
    std::vector<int> sign;             // +1 or -1 per pair

    long long delta(Dart d) const { return d.rev ? delta_from[d.pair] : delta_to[d.pair]; }
    bool positive() const;
};

// delta_e = d_tau(e) / d_e, all signs +1.
LabeledGbs gbs_from_numbering(const NumberedGraph& g);

// Value of the modular homomorphism on each fundamental cycle of a BFS
// spanning tree (one value per non-tree pair, in pair order). Trivial iff
// every value equals 1.
std::vector<Rational> modular_homomorphism(const LabeledGbs& gbs);

// Unique labelling with d_tau(e)/d_e = delta(e), integral, normalized so that
// the gcd of the edge labels is 1. Errors: negative sign, nontrivial modular
// value, edgeless graph.
NumberedGraph numbering_from_gbs(const LabeledGbs& gbs);

// numbering_from_gbs(gbs_from_numbering(g)): divides all labels by the gcd of
// the edge labels. Identity exactly when that gcd is already 1.
NumberedGraph centre_normalize(const NumberedGraph& g);

// FNV-1a over a canonical rendering; used for certificate audit trails.
std::uint64_t graph_hash(const NumberedGraph& g);

} // namespace gbslide
