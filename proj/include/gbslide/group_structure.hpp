#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbslide/numbered_graph.hpp"
#include "gbslide/rational.hpp"
#include "gbslide/tagged_poset.hpp"

namespace gbslide {

// Word in the generators of a presentation, stored freely reduced as
// (generator index, nonzero exponent) syllables.
struct Word {
    std::vector<std::pair<int, int>> syllables;

    bool empty() const { return syllables.empty(); }
    friend bool operator==(const Word& a, const Word& b) { return a.syllables == b.syllables; }
};

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const std::vector<Word>& parts); // freely reduced

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    int generator_index(const std::string& name) const;
    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.generators == b.generators && a.relators == b.relators;
    }
};

std::string word_str(const Presentation& p, const Word& w);

enum class Interp {
    gbs,            // graph of infinite cyclic groups via the label ratios
    finite_quotient // graph of finite cyclic groups of orders d
};

// Presentation on one generator per vertex (t_<id>) plus one stable letter
// per non-tree edge (g_<id>), over a BFS spanning tree from the smallest
// vertex id. Tree edge: t_o^{delta_bar} = t_tau^{delta}; non-tree edge:
// g t_tau^{delta} g^-1 = t_o^{delta_bar}. The finite_quotient interpretation
// adds t_v^{d_v}.
Presentation present(const NumberedGraph& g, Interp interp);

struct Epimorphism {
    long long modulus = 1; // lcm of the vertex labels
    std::vector<std::pair<std::string, long long>> images;
};

// t_v -> M/d_v, stable letters -> 0, into Z/M. Well-definedness (every
// finite_quotient relator mapping to 0) is executed, not assumed.
Epimorphism structure_epimorphism(const NumberedGraph& g);

// Sum over vertices of 1/d_v minus sum over edge pairs of 1/d_e.
Rational rational_euler_char(const NumberedGraph& g);

// m = (1 - N) / chi; requires chi < 0 and an integral positive result.
long long holonomy_order(const NumberedGraph& g, long long fiber_rank);
// N = 1 - m * chi; requires chi < 0, m >= 1, and an integral result.
long long fiber_rank(const NumberedGraph& g, long long holonomy);

// After reduction and centre normalization, an all-ones graph presents
// F_M x Z with M its first Betti number; anything else is not a direct
// product. Throws DegenerateGroupError on edgeless input or reduction.
std::optional<long long> recognize_direct_product(const NumberedGraph& g);

// Necessary condition for the graph to present some G with trivial centre:
// the gcd of the edge labels is 1.
bool centreless_candidate(const NumberedGraph& g);

// Group-facing reading of the associated poset: one conjugacy class of
// finite cyclic subgroups per element, of order `level`, with centraliser
// first Betti number `tag`. The level-1 minimum is the trivial subgroup.
struct FscClass {
    std::string element_id;
    long long subgroup_order = 1;
    int centraliser_betti = 0;
    bool trivial_class = false;
};

struct FscReport {
    TaggedPoset poset;
    std::vector<FscClass> classes;
};

FscReport fsc_report(const NumberedGraph& g);

// Replaces relator i by (t^-1 r t)^-1 r (t^-1 r t) r^-2 where r is the
// cyclically reduced relator, forcing r to die in every finite quotient
// while keeping the quotient by its normal closure intact. Errors: fewer
// than two generators, unknown letter t, r trivial or a power of t.
Presentation higman_twist(const Presentation& p, int relator_index, const std::string& letter);

} // namespace gbslide
