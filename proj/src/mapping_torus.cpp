#include "gbslide/mapping_torus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gbslide {

NumberedGraph mapping_torus(const GraphAutomorphism& f_in) {
    check_input(!f_in.base().empty() && is_connected(f_in.base()),
                "mapping torus: graph must be connected and nonempty");
    GraphAutomorphism f = subdivide_inverted_edges(f_in);
    const SerreGraph& x = f.base();
    const long m = aut_order(f);
    OrbitPartition orb = orbits(f);

    auto orbit_name = [&](const std::vector<int>& members, bool vertex) {
        std::string best;
        for (int i : members) {
            const std::string& name = vertex ? x.vertex_name(i) : x.pair_name(i);
            if (best.empty() || name < best) best = name;
        }
        return best;
    };

    // Quotient vertices sorted by representative name.
    std::vector<int> vorder(orb.vertex_orbits.size());
    std::iota(vorder.begin(), vorder.end(), 0);
    std::vector<std::string> vnames(orb.vertex_orbits.size());
    for (size_t i = 0; i < orb.vertex_orbits.size(); ++i)
        vnames[i] = orbit_name(orb.vertex_orbits[i], true);
    std::sort(vorder.begin(), vorder.end(),
              [&](int a, int b) { return vnames[a] < vnames[b]; });

    SerreGraph q;
    std::vector<long long> vl;
    std::vector<int> qvertex(orb.vertex_orbits.size(), -1);
    for (int i : vorder) {
        qvertex[i] = q.add_vertex(vnames[i]);
        long orbit_size = static_cast<long>(orb.vertex_orbits[i].size());
        check_internal(m % orbit_size == 0, "mapping torus: vertex orbit size does not divide order");
        vl.push_back(m / orbit_size);
    }

    std::vector<int> porder(orb.pair_orbits.size());
    std::iota(porder.begin(), porder.end(), 0);
    std::vector<std::string> pnames(orb.pair_orbits.size());
    for (size_t i = 0; i < orb.pair_orbits.size(); ++i)
        pnames[i] = orbit_name(orb.pair_orbits[i], false);
    std::sort(porder.begin(), porder.end(),
              [&](int a, int b) { return pnames[a] < pnames[b]; });

    std::vector<long long> el;
    for (int i : porder) {
        // Representative pair with the smallest name; its canonical
        // orientation induces the quotient edge's orientation.
        int rep = orb.pair_orbits[i][0];
        for (int p : orb.pair_orbits[i])
            if (x.pair_name(p) == pnames[i]) rep = p;
        long orbit_size = static_cast<long>(orb.pair_orbits[i].size());
        check_internal(m % orbit_size == 0, "mapping torus: edge orbit size does not divide order");
        q.add_edge(pnames[i], qvertex[orb.vertex_orbit_of[x.from(rep)]],
                   qvertex[orb.vertex_orbit_of[x.to(rep)]]);
        el.push_back(m / orbit_size);
    }
    // The constructor checks Def-style divisibility d_e | d_v, which holds
    // because the stabilizer of an edge stabilizes its endpoints.
    return NumberedGraph(std::move(q), std::move(vl), std::move(el));
}

GraphAutomorphism cage_graph(long m, long r, long step) {
    check_input(m >= 3, "cage: m must be >= 3");
    check_input(r >= 2, "cage: r must be >= 2");
    check_input(std::gcd(m, r) == 1, "cage: gcd(m, r) must be 1");
    check_input(std::gcd(((step % m) + m) % m, m) == 1, "cage: gcd(step, m) must be 1");
    step = ((step % m) + m) % m;

    SerreGraph g;
    std::vector<int> inner(m), outer(m);
    for (long i = 0; i < m; ++i) inner[i] = g.add_vertex("v" + std::to_string(i));
    for (long i = 0; i < m; ++i) outer[i] = g.add_vertex("w" + std::to_string(i));
    std::vector<int> in_edge(m), out_edge(m);
    std::vector<std::vector<int>> cage(m, std::vector<int>(r));
    for (long i = 0; i < m; ++i)
        in_edge[i] = g.add_edge("in" + std::to_string(i), inner[i], inner[(i + step) % m]);
    for (long i = 0; i < m; ++i)
        out_edge[i] = g.add_edge("out" + std::to_string(i), outer[i], outer[(i + 1) % m]);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < r; ++j)
            cage[i][j] = g.add_edge("c" + std::to_string(i) + "_" + std::to_string(j),
                                    inner[i], outer[i]);

    std::vector<int> vmap(g.vertex_count());
    for (long i = 0; i < m; ++i) {
        vmap[inner[i]] = inner[(i + 1) % m];
        vmap[outer[i]] = outer[(i + 1) % m];
    }
    std::vector<Dart> pmap(g.pair_count());
    for (long i = 0; i < m; ++i) {
        pmap[in_edge[i]] = Dart{in_edge[(i + 1) % m], false};
        pmap[out_edge[i]] = Dart{out_edge[(i + 1) % m], false};
        for (long j = 0; j < r; ++j)
            pmap[cage[i][j]] = Dart{cage[(i + 1) % m][(j + 1) % r], false};
    }
    return GraphAutomorphism(std::move(g), std::move(vmap), std::move(pmap));
}

GraphAutomorphism rose_cyclic_cover(long M, long m) {
    check_input(M >= 2, "rose cover: M must be >= 2");
    check_input(m >= 1, "rose cover: m must be >= 1");
    SerreGraph g;
    std::vector<int> v(m);
    for (long i = 0; i < m; ++i) v[i] = g.add_vertex("u" + std::to_string(i));
    std::vector<int> cyc(m);
    std::vector<std::vector<int>> loops(m, std::vector<int>(M - 1));
    for (long i = 0; i < m; ++i)
        cyc[i] = g.add_edge("a" + std::to_string(i), v[i], v[(i + 1) % m]);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < M - 1; ++j)
            loops[i][j] =
                g.add_edge("l" + std::to_string(i) + "_" + std::to_string(j), v[i], v[i]);

    std::vector<int> vmap(g.vertex_count());
    std::vector<Dart> pmap(g.pair_count());
    for (long i = 0; i < m; ++i) {
        vmap[v[i]] = v[(i + 1) % m];
        pmap[cyc[i]] = Dart{cyc[(i + 1) % m], false};
        for (long j = 0; j < M - 1; ++j)
            pmap[loops[i][j]] = Dart{loops[(i + 1) % m][j], false};
    }
    return GraphAutomorphism(std::move(g), std::move(vmap), std::move(pmap));
}

bool coprime_power_check(const GraphAutomorphism& f, long k) {
    long m = aut_order(f);
    check_input(std::gcd(((k % m) + m) % m, m) == 1 || m == 1,
                "coprime power check: k must be coprime to the order of f");
    return mapping_torus(f) == mapping_torus(aut_power(f, k));
}

NumberedGraph fig1a() {
    return make_numbered_graph(
        {{"u", 4}, {"a", 12}, {"b", 12}, {"c", 12}},
        {{"ab", "a", "b", 6},
         {"ac", "a", "c", 3},
         {"bc", "b", "c", 1},
         {"ua", "u", "a", 2},
         {"ub", "u", "b", 2},
         {"uloop", "u", "u", 4}});
}

NumberedGraph fig1b() {
    // fig1a after sliding the ub edge along ab from b to a.
    return make_numbered_graph(
        {{"u", 4}, {"a", 12}, {"b", 12}, {"c", 12}},
        {{"ab", "a", "b", 6},
         {"ac", "a", "c", 3},
         {"bc", "b", "c", 1},
         {"ua", "u", "a", 2},
         {"ub", "u", "a", 2},
         {"uloop", "u", "u", 4}});
}

NumberedGraph klein() {
    return make_numbered_graph({{"a", 2}, {"b", 2}}, {{"e", "a", "b", 1}});
}

} // namespace gbslide
