#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbslide/error.hpp"

namespace gbslide {

// A directed edge. Each unordered edge pair {e, e-bar} is stored once with a
// canonical orientation (from -> to); a Dart addresses one of its two
// directions as pair index plus a direction flag. bar(d) flips the flag, so
// the involution is fixed-point free by construction.
struct Dart {
    int pair = -1;
    bool rev = false;

    friend bool operator==(const Dart& a, const Dart& b) {
        return a.pair == b.pair && a.rev == b.rev;
    }
    friend bool operator!=(const Dart& a, const Dart& b) { return !(a == b); }
};

inline Dart bar(Dart d) { return Dart{d.pair, !d.rev}; }

// Finite graph in Serre's formalism: vertices, edge pairs with the canonical
// orientation, endpoint map tau on darts. Loops (from == to) are allowed; the
// two darts of a loop stay distinct.
class SerreGraph {
public:
    SerreGraph() = default;

    int add_vertex(const std::string& name);
    // Returns the new pair index; endpoints must already exist.
    int add_edge(const std::string& name, int from, int to);

    int vertex_count() const { return static_cast<int>(vnames_.size()); }
    int pair_count() const { return static_cast<int>(pairs_.size()); }
    bool empty() const { return vnames_.empty(); }

    const std::string& vertex_name(int v) const { return vnames_[v]; }
    const std::string& pair_name(int p) const { return pairs_[p].name; }
    int from(int p) const { return pairs_[p].from; }
    int to(int p) const { return pairs_[p].to; }
    bool is_loop(int p) const { return pairs_[p].from == pairs_[p].to; }

    int tau(Dart d) const { return d.rev ? pairs_[d.pair].from : pairs_[d.pair].to; }
    int origin(Dart d) const { return tau(bar(d)); }

    // -1 if the name is unknown.
    int find_vertex(const std::string& name) const;
    int find_pair(const std::string& name) const;

    // Darts with origin v, ordered by (pair, rev). Both darts of a loop at v
    // appear.
    std::vector<Dart> darts_at(int v) const;

    // Moves the tau end of d to v (slide support). The origin is unchanged.
    void set_tau(Dart d, int v);

private:
    struct EdgePair {
        std::string name;
        int from = -1;
        int to = -1;
    };
    std::vector<std::string> vnames_;
    std::vector<EdgePair> pairs_;
};

struct ComponentPartition {
    int count = 0;
    std::vector<int> vertex_comp;
    std::vector<int> pair_comp;
};

ComponentPartition components(const SerreGraph& g);
bool is_connected(const SerreGraph& g);

// First Betti number of a nonempty connected graph: edge pairs - vertices + 1.
// Throws InputError on empty or disconnected input.
int betti(const SerreGraph& g);

// A subgraph given by sorted vertex and pair index lists.
struct Subgraph {
    std::vector<int> vertices;
    std::vector<int> pairs;

    bool contains_vertex(int v) const;
    friend bool operator==(const Subgraph& a, const Subgraph& b) {
        return a.vertices == b.vertices && a.pairs == b.pairs;
    }
};

// beta_1 of a connected subgraph.
inline int subgraph_betti(const Subgraph& s) {
    return static_cast<int>(s.pairs.size()) - static_cast<int>(s.vertices.size()) + 1;
}

// Graph automorphism: vertex bijection plus a pair map with orientation.
// Construction validates bijectivity and incidence compatibility; any
// mismatch is a hard error.
class GraphAutomorphism {
public:
    GraphAutomorphism(SerreGraph graph, std::vector<int> vmap, std::vector<Dart> pair_image);

    const SerreGraph& base() const { return graph_; }
    int map_vertex(int v) const { return vmap_[v]; }
    Dart map_dart(Dart d) const {
        Dart img = pair_image_[d.pair];
        return Dart{img.pair, img.rev != d.rev};
    }
    const std::vector<int>& vertex_map() const { return vmap_; }
    const std::vector<Dart>& pair_map() const { return pair_image_; }

private:
    SerreGraph graph_;
    std::vector<int> vmap_;
    std::vector<Dart> pair_image_;
};

// Least n >= 1 with f^n = identity (on vertices and darts).
long aut_order(const GraphAutomorphism& f);

GraphAutomorphism aut_power(const GraphAutomorphism& f, long k);

struct OrbitPartition {
    std::vector<std::vector<int>> vertex_orbits; // each sorted, ordered by min member
    std::vector<std::vector<int>> pair_orbits;
    std::vector<int> vertex_orbit_of;
    std::vector<int> pair_orbit_of;
};

OrbitPartition orbits(const GraphAutomorphism& f);

// Subdivides every edge pair whose <f>-orbit meets an inversion (some power
// of f carrying a dart to its bar), inserting a midpoint vertex, and extends
// f over the result. Graphs on which <f> already acts without inversions are
// returned unchanged.
GraphAutomorphism subdivide_inverted_edges(const GraphAutomorphism& f);

} // namespace gbslide
