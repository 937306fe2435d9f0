#include "gbslide/serre_graph.hpp"

#include <algorithm>
#include <numeric>

namespace gbslide {

int SerreGraph::add_vertex(const std::string& name) {
    check_input(find_vertex(name) < 0, "duplicate vertex id '" + name + "'");
    vnames_.push_back(name);
    return vertex_count() - 1;
}

int SerreGraph::add_edge(const std::string& name, int from, int to) {
    check_input(find_pair(name) < 0, "duplicate edge id '" + name + "'");
    check_input(from >= 0 && from < vertex_count() && to >= 0 && to < vertex_count(),
                "edge '" + name + "' references a missing vertex");
    pairs_.push_back(EdgePair{name, from, to});
    return pair_count() - 1;
}

int SerreGraph::find_vertex(const std::string& name) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vnames_[v] == name) return v;
    return -1;
}

int SerreGraph::find_pair(const std::string& name) const {
    for (int p = 0; p < pair_count(); ++p)
        if (pairs_[p].name == name) return p;
    return -1;
}

std::vector<Dart> SerreGraph::darts_at(int v) const {
    std::vector<Dart> out;
    for (int p = 0; p < pair_count(); ++p) {
        if (pairs_[p].from == v) out.push_back(Dart{p, false});
        if (pairs_[p].to == v) out.push_back(Dart{p, true});
    }
    return out;
}

void SerreGraph::set_tau(Dart d, int v) {
    check_input(v >= 0 && v < vertex_count(), "set_tau: vertex out of range");
    if (d.rev)
        pairs_[d.pair].from = v;
    else
        pairs_[d.pair].to = v;
}

bool Subgraph::contains_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

ComponentPartition components(const SerreGraph& g) {
    ComponentPartition part;
    part.vertex_comp.assign(g.vertex_count(), -1);
    part.pair_comp.assign(g.pair_count(), -1);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (part.vertex_comp[start] >= 0) continue;
        int c = part.count++;
        std::vector<int> stack{start};
        part.vertex_comp[start] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Dart& d : g.darts_at(v)) {
                part.pair_comp[d.pair] = c;
                int w = g.tau(d);
                if (part.vertex_comp[w] < 0) {
                    part.vertex_comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
    }
    return part;
}

bool is_connected(const SerreGraph& g) {
    return components(g).count == 1;
}

int betti(const SerreGraph& g) {
    check_input(!g.empty(), "betti: empty graph");
    check_input(is_connected(g), "betti: disconnected graph");
    return g.pair_count() - g.vertex_count() + 1;
}

GraphAutomorphism::GraphAutomorphism(SerreGraph graph, std::vector<int> vmap,
                                     std::vector<Dart> pair_image)
    : graph_(std::move(graph)), vmap_(std::move(vmap)), pair_image_(std::move(pair_image)) {
    const int nv = graph_.vertex_count();
    const int np = graph_.pair_count();
    check_input(static_cast<int>(vmap_.size()) == nv, "automorphism: vertex map size mismatch");
    check_input(static_cast<int>(pair_image_.size()) == np, "automorphism: edge map size mismatch");

    std::vector<bool> vseen(nv, false), pseen(np, false);
    for (int v = 0; v < nv; ++v) {
        check_input(vmap_[v] >= 0 && vmap_[v] < nv && !vseen[vmap_[v]],
                    "automorphism: vertex map is not a bijection");
        vseen[vmap_[v]] = true;
    }
    for (int p = 0; p < np; ++p) {
        const Dart& img = pair_image_[p];
        check_input(img.pair >= 0 && img.pair < np && !pseen[img.pair],
                    "automorphism: edge map is not a bijection");
        pseen[img.pair] = true;
        // Incidence: tau(f(d)) = f(tau(d)) for both darts of the pair.
        for (bool rev : {false, true}) {
            Dart d{p, rev};
            Dart fd{img.pair, img.rev != rev};
            check_input(graph_.tau(fd) == vmap_[graph_.tau(d)],
                        "automorphism: edge '" + graph_.pair_name(p) +
                            "' image incompatible with incidence");
        }
    }
}

namespace {

// Permutation on vertices and darts; order = lcm of cycle lengths.
long permutation_order(const GraphAutomorphism& f) {
    const SerreGraph& g = f.base();
    const int nv = g.vertex_count();
    const int np = g.pair_count();
    const int n = nv + 2 * np;
    auto point_image = [&](int x) {
        if (x < nv) return f.map_vertex(x);
        int rest = x - nv;
        Dart d{rest / 2, rest % 2 == 1};
        Dart fd = f.map_dart(d);
        return nv + 2 * fd.pair + (fd.rev ? 1 : 0);
    };
    std::vector<bool> seen(n, false);
    long order = 1;
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        long len = 0;
        int y = x;
        do {
            seen[y] = true;
            y = point_image(y);
            ++len;
        } while (y != x);
        order = std::lcm(order, len);
    }
    return order;
}

} // namespace

long aut_order(const GraphAutomorphism& f) { return permutation_order(f); }

GraphAutomorphism aut_power(const GraphAutomorphism& f, long k) {
    const long m = aut_order(f);
    long e = ((k % m) + m) % m;
    const SerreGraph& g = f.base();
    std::vector<int> vmap(g.vertex_count());
    std::vector<Dart> pmap(g.pair_count());
    for (int v = 0; v < g.vertex_count(); ++v) vmap[v] = v;
    for (int p = 0; p < g.pair_count(); ++p) pmap[p] = Dart{p, false};
    for (long i = 0; i < e; ++i) {
        for (int v = 0; v < g.vertex_count(); ++v) vmap[v] = f.map_vertex(vmap[v]);
        for (int p = 0; p < g.pair_count(); ++p) pmap[p] = f.map_dart(pmap[p]);
    }
    return GraphAutomorphism(g, std::move(vmap), std::move(pmap));
}

OrbitPartition orbits(const GraphAutomorphism& f) {
    const SerreGraph& g = f.base();
    OrbitPartition out;
    out.vertex_orbit_of.assign(g.vertex_count(), -1);
    out.pair_orbit_of.assign(g.pair_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (out.vertex_orbit_of[v] >= 0) continue;
        std::vector<int> orb;
        int x = v;
        do {
            out.vertex_orbit_of[x] = static_cast<int>(out.vertex_orbits.size());
            orb.push_back(x);
            x = f.map_vertex(x);
        } while (x != v);
        std::sort(orb.begin(), orb.end());
        out.vertex_orbits.push_back(std::move(orb));
    }
    for (int p = 0; p < g.pair_count(); ++p) {
        if (out.pair_orbit_of[p] >= 0) continue;
        std::vector<int> orb;
        int x = p;
        do {
            out.pair_orbit_of[x] = static_cast<int>(out.pair_orbits.size());
            orb.push_back(x);
            x = f.map_dart(Dart{x, false}).pair;
        } while (x != p);
        std::sort(orb.begin(), orb.end());
        out.pair_orbits.push_back(std::move(orb));
    }
    return out;
}

GraphAutomorphism subdivide_inverted_edges(const GraphAutomorphism& f) {
    const SerreGraph& g = f.base();
    // A pair is inverted if following the pair orbit from its canonical dart
    // returns to the same pair with reversed orientation.
    std::vector<bool> inverted(g.pair_count(), false);
    for (int p = 0; p < g.pair_count(); ++p) {
        Dart d = f.map_dart(Dart{p, false});
        while (d.pair != p) d = f.map_dart(d);
        if (d.rev) {
            // Whole orbit carries the inversion.
            int q = p;
            do {
                inverted[q] = true;
                q = f.map_dart(Dart{q, false}).pair;
            } while (q != p);
        }
    }
    if (std::none_of(inverted.begin(), inverted.end(), [](bool b) { return b; }))
        return f;

    SerreGraph h;
    for (int v = 0; v < g.vertex_count(); ++v) h.add_vertex(g.vertex_name(v));
    std::vector<int> midpoint(g.pair_count(), -1);
    for (int p = 0; p < g.pair_count(); ++p)
        if (inverted[p]) midpoint[p] = h.add_vertex(g.pair_name(p) + ".mid");

    // Pair p maps to h-pairs: either a copy, or two halves p.a (from -> mid)
    // and p.b (mid -> to).
    std::vector<int> copy_of(g.pair_count(), -1);
    std::vector<int> half_a(g.pair_count(), -1), half_b(g.pair_count(), -1);
    for (int p = 0; p < g.pair_count(); ++p) {
        if (!inverted[p]) {
            copy_of[p] = h.add_edge(g.pair_name(p), g.from(p), g.to(p));
        } else {
            half_a[p] = h.add_edge(g.pair_name(p) + ".a", g.from(p), midpoint[p]);
            half_b[p] = h.add_edge(g.pair_name(p) + ".b", midpoint[p], g.to(p));
        }
    }

    std::vector<int> vmap(h.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) vmap[v] = f.map_vertex(v);
    for (int p = 0; p < g.pair_count(); ++p)
        if (inverted[p]) vmap[midpoint[p]] = midpoint[f.map_dart(Dart{p, false}).pair];

    std::vector<Dart> pmap(h.pair_count());
    for (int p = 0; p < g.pair_count(); ++p) {
        Dart img = f.map_dart(Dart{p, false});
        if (!inverted[p]) {
            pmap[copy_of[p]] = Dart{copy_of[img.pair], img.rev};
        } else {
            // First half of the canonical dart of p maps to the first half of
            // its image dart; reversal swaps the halves.
            if (!img.rev) {
                pmap[half_a[p]] = Dart{half_a[img.pair], false};
                pmap[half_b[p]] = Dart{half_b[img.pair], false};
            } else {
                pmap[half_a[p]] = Dart{half_b[img.pair], true};
                pmap[half_b[p]] = Dart{half_a[img.pair], true};
            }
        }
    }
    return GraphAutomorphism(std::move(h), std::move(vmap), std::move(pmap));
}

} // namespace gbslide
