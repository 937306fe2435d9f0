#include "gbslide/numbered_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace gbslide {

NumberedGraph::NumberedGraph(SerreGraph graph, std::vector<long long> vertex_labels,
                             std::vector<long long> edge_labels)
    : graph_(std::move(graph)), vlabel_(std::move(vertex_labels)),
      elabel_(std::move(edge_labels)) {
    check_input(static_cast<int>(vlabel_.size()) == graph_.vertex_count(),
                "numbered graph: vertex label count mismatch");
    check_input(static_cast<int>(elabel_.size()) == graph_.pair_count(),
                "numbered graph: edge label count mismatch");
    check_input(!graph_.empty(), "numbered graph: empty graph");
    check_input(is_connected(graph_), "numbered graph: graph must be connected");
    for (long long d : vlabel_) check_input(d >= 1, "numbered graph: vertex label must be >= 1");
    for (int p = 0; p < graph_.pair_count(); ++p) {
        check_input(elabel_[p] >= 1, "numbered graph: edge label must be >= 1");
        for (int v : {graph_.from(p), graph_.to(p)})
            check_input(vlabel_[v] % elabel_[p] == 0,
                        "numbered graph: label of edge '" + graph_.pair_name(p) +
                            "' does not divide label of vertex '" + graph_.vertex_name(v) + "'");
    }
}

bool operator==(const NumberedGraph& a, const NumberedGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.pair_count() != b.pair_count()) return false;
    for (int v = 0; v < a.vertex_count(); ++v) {
        int w = b.graph().find_vertex(a.graph().vertex_name(v));
        if (w < 0 || a.vlabel_[v] != b.vlabel_[w]) return false;
    }
    for (int p = 0; p < a.pair_count(); ++p) {
        int q = b.graph().find_pair(a.graph().pair_name(p));
        if (q < 0 || a.elabel_[p] != b.elabel_[q]) return false;
        std::pair<std::string, std::string> ea{a.graph().vertex_name(a.graph().from(p)),
                                               a.graph().vertex_name(a.graph().to(p))};
        std::pair<std::string, std::string> eb{b.graph().vertex_name(b.graph().from(q)),
                                               b.graph().vertex_name(b.graph().to(q))};
        if (ea.first > ea.second) std::swap(ea.first, ea.second);
        if (eb.first > eb.second) std::swap(eb.first, eb.second);
        if (ea != eb) return false;
    }
    return true;
}

NumberedGraph make_numbered_graph(
    std::vector<std::pair<std::string, long long>> vertices,
    std::vector<std::tuple<std::string, std::string, std::string, long long>> edges) {
    std::sort(vertices.begin(), vertices.end());
    std::sort(edges.begin(), edges.end());
    SerreGraph g;
    for (auto& [name, d] : vertices) {
        (void)d;
        g.add_vertex(name);
    }
    std::vector<long long> vl, el;
    for (auto& [name, d] : vertices) {
        (void)name;
        vl.push_back(d);
    }
    for (auto& [name, a, b, d] : edges) {
        int va = g.find_vertex(a);
        int vb = g.find_vertex(b);
        check_input(va >= 0 && vb >= 0, "edge '" + name + "' references a missing vertex");
        g.add_edge(name, va, vb);
        el.push_back(d);
    }
    return NumberedGraph(std::move(g), std::move(vl), std::move(el));
}

std::optional<LabelledIso> labelled_iso(const NumberedGraph& a, const NumberedGraph& b) {
    return labelled_iso(a.graph(), a.vertex_labels(), a.edge_labels(), b.graph(),
                        b.vertex_labels(), b.edge_labels());
}

bool labelled_equal_under(const NumberedGraph& a, const NumberedGraph& b,
                          const std::vector<int>& vmap) {
    if (a.vertex_count() != b.vertex_count() || a.pair_count() != b.pair_count()) return false;
    for (int v = 0; v < a.vertex_count(); ++v)
        if (a.vertex_label(v) != b.vertex_label(vmap[v])) return false;
    std::map<std::tuple<int, int, long long>, int> count;
    for (int p = 0; p < a.pair_count(); ++p) {
        int u = vmap[a.graph().from(p)];
        int w = vmap[a.graph().to(p)];
        ++count[{std::min(u, w), std::max(u, w), a.edge_label(p)}];
    }
    for (int q = 0; q < b.pair_count(); ++q) {
        int u = b.graph().from(q);
        int w = b.graph().to(q);
        if (--count[{std::min(u, w), std::max(u, w), b.edge_label(q)}] < 0) return false;
    }
    return true;
}

NumberedGraph slide(const NumberedGraph& g, SlideMove m) {
    const SerreGraph& s = g.graph();
    check_input(m.moved.pair >= 0 && m.moved.pair < s.pair_count() && m.along.pair >= 0 &&
                    m.along.pair < s.pair_count(),
                "slide: dart out of range");
    check_input(m.moved.pair != m.along.pair,
                "slide: moved edge and along edge must be distinct pairs");
    check_input(s.tau(m.moved) == s.origin(m.along),
                "slide: tau(moved) must equal o(along)");
    check_input(g.edge_label(m.along.pair) % g.edge_label(m.moved.pair) == 0,
                "slide: moved edge label must divide along edge label");
    SerreGraph h = g.graph_;
    h.set_tau(m.moved, s.tau(m.along));
    return NumberedGraph(std::move(h), g.vlabel_, g.elabel_);
}

bool is_reduced(const NumberedGraph& g) {
    for (int p = 0; p < g.pair_count(); ++p) {
        if (g.graph().is_loop(p)) continue;
        if (g.edge_label(p) == g.vertex_label(g.graph().from(p)) ||
            g.edge_label(p) == g.vertex_label(g.graph().to(p)))
            return false;
    }
    return true;
}

namespace {

NumberedGraph collapse_pair(const NumberedGraph& g, int p, int removed, int kept) {
    SerreGraph h;
    std::vector<long long> vl, el;
    std::vector<int> vidx(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == removed) continue;
        vidx[v] = h.add_vertex(g.graph().vertex_name(v));
        vl.push_back(g.vertex_label(v));
    }
    vidx[removed] = vidx[kept];
    for (int q = 0; q < g.pair_count(); ++q) {
        if (q == p) continue;
        h.add_edge(g.graph().pair_name(q), vidx[g.graph().from(q)], vidx[g.graph().to(q)]);
        el.push_back(g.edge_label(q));
    }
    return NumberedGraph(std::move(h), std::move(vl), std::move(el));
}

} // namespace

std::pair<NumberedGraph, std::vector<CollapseStep>> reduce(const NumberedGraph& g) {
    NumberedGraph cur = g;
    std::vector<CollapseStep> log;
    for (;;) {
        // Eligible dart: non-loop pair with d_e = d_tau(e). Pick the
        // lexicographically smallest edge id; if both ends qualify, remove
        // the larger-named vertex.
        int best_pair = -1;
        bool best_rev = false;
        for (int p = 0; p < cur.pair_count(); ++p) {
            if (cur.graph().is_loop(p)) continue;
            bool can_fwd = cur.edge_label(p) == cur.vertex_label(cur.graph().to(p));
            bool can_rev = cur.edge_label(p) == cur.vertex_label(cur.graph().from(p));
            if (!can_fwd && !can_rev) continue;
            if (best_pair >= 0 &&
                cur.graph().pair_name(p) >= cur.graph().pair_name(best_pair))
                continue;
            best_pair = p;
            if (can_fwd && can_rev) {
                best_rev = cur.graph().vertex_name(cur.graph().from(p)) >
                           cur.graph().vertex_name(cur.graph().to(p));
            } else {
                best_rev = can_rev;
            }
        }
        if (best_pair < 0) break;
        Dart d{best_pair, best_rev};
        int removed = cur.graph().tau(d);
        int kept = cur.graph().origin(d);
        log.push_back(CollapseStep{cur.graph().pair_name(best_pair),
                                   cur.graph().vertex_name(removed),
                                   cur.graph().vertex_name(kept)});
        cur = collapse_pair(cur, best_pair, removed, kept);
    }
    check_internal(is_reduced(cur), "reduce: output not reduced");
    return {cur, log};
}

NumberedGraph apply_collapse(const NumberedGraph& g, const CollapseStep& step) {
    int p = g.graph().find_pair(step.edge);
    check_input(p >= 0, "collapse: unknown edge '" + step.edge + "'");
    int removed = g.graph().find_vertex(step.removed_vertex);
    int kept = g.graph().find_vertex(step.kept_vertex);
    check_input(removed >= 0 && kept >= 0, "collapse: unknown vertex");
    check_input(!g.graph().is_loop(p), "collapse: edge '" + step.edge + "' is a loop");
    bool matches = (g.graph().from(p) == kept && g.graph().to(p) == removed) ||
                   (g.graph().from(p) == removed && g.graph().to(p) == kept);
    check_input(matches, "collapse: edge '" + step.edge + "' does not join the named vertices");
    check_input(g.edge_label(p) == g.vertex_label(removed),
                "collapse: edge label must equal the removed vertex label");
    return collapse_pair(g, p, removed, kept);
}

bool LabeledGbs::positive() const {
    return std::all_of(sign.begin(), sign.end(), [](int s) { return s == 1; });
}

LabeledGbs gbs_from_numbering(const NumberedGraph& g) {
    LabeledGbs out;
    out.graph = g.graph();
    out.delta_to.resize(g.pair_count());
    out.delta_from.resize(g.pair_count());
    out.sign.assign(g.pair_count(), 1);
    for (int p = 0; p < g.pair_count(); ++p) {
        out.delta_to[p] = g.vertex_label(g.graph().to(p)) / g.edge_label(p);
        out.delta_from[p] = g.vertex_label(g.graph().from(p)) / g.edge_label(p);
    }
    return out;
}

namespace {

// Parent darts of a BFS spanning tree rooted at vertex 0, plus the non-tree
// pair list in index order.
struct SpanningTree {
    std::vector<Dart> parent;   // dart with tau = v, origin = BFS parent; root has pair -1
    std::vector<int> bfs_order;
    std::vector<bool> in_tree;  // per pair
};

SpanningTree bfs_tree(const SerreGraph& g) {
    SpanningTree t;
    t.parent.assign(g.vertex_count(), Dart{-1, false});
    t.in_tree.assign(g.pair_count(), false);
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        t.bfs_order.push_back(v);
        for (const Dart& d : g.darts_at(v)) {
            int w = g.tau(d);
            if (!seen[w]) {
                seen[w] = true;
                t.parent[w] = d;
                t.in_tree[d.pair] = true;
                queue.push_back(w);
            }
        }
    }
    return t;
}

} // namespace

std::vector<Rational> modular_homomorphism(const LabeledGbs& gbs) {
    const SerreGraph& g = gbs.graph;
    check_input(!g.empty() && is_connected(g), "modular homomorphism: graph must be connected");
    SpanningTree t = bfs_tree(g);
    // Multiplicative potential along the tree: value(root) = 1,
    // value(v) = value(parent) * sign * delta(bar d) / delta(d) for the
    // parent dart d into v. The fundamental-cycle value of a non-tree dart e
    // is value(o(e)) / value(tau(e)) * sign * delta(bar e)/delta(e).
    std::vector<Rational> value(g.vertex_count(), Rational(1));
    for (int v : t.bfs_order) {
        Dart d = t.parent[v];
        if (d.pair < 0) continue;
        Rational step = Rational(gbs.sign[d.pair]) * Rational(gbs.delta(bar(d)), gbs.delta(d));
        value[v] = value[g.origin(d)] * step;
    }
    std::vector<Rational> out;
    for (int p = 0; p < g.pair_count(); ++p) {
        if (t.in_tree[p]) continue;
        Dart d{p, false};
        Rational step = Rational(gbs.sign[p]) * Rational(gbs.delta(bar(d)), gbs.delta(d));
        out.push_back(value[g.origin(d)] * step / value[g.tau(d)]);
    }
    return out;
}

NumberedGraph numbering_from_gbs(const LabeledGbs& gbs) {
    const SerreGraph& g = gbs.graph;
    check_input(!g.empty() && is_connected(g), "numbering: graph must be connected");
    check_input(g.pair_count() >= 1, "numbering: edgeless graph presents Z, no numbering");
    check_input(gbs.positive(), "numbering: GBS structure must be positive");
    for (const Rational& v : modular_homomorphism(gbs))
        check_input(v == Rational(1),
                    "numbering: modular homomorphism is nontrivial (cycle value " + v.str() + ")");

    // Ratio propagation over a spanning tree: x_tau(d) / x_o(d) =
    // delta(d) / delta(bar d). Cycle consistency holds by modular
    // triviality.
    SpanningTree t = bfs_tree(g);
    std::vector<Rational> x(g.vertex_count(), Rational(1));
    for (int v : t.bfs_order) {
        Dart d = t.parent[v];
        if (d.pair < 0) continue;
        x[v] = x[g.origin(d)] * Rational(gbs.delta(d), gbs.delta(bar(d)));
    }
    // Edge values x_e = x_tau(e)/delta(e); clear denominators minimally.
    std::vector<Rational> xe(g.pair_count());
    long long scale = 1;
    for (int p = 0; p < g.pair_count(); ++p) {
        Dart d{p, false};
        xe[p] = x[g.tau(d)] / Rational(gbs.delta(d));
        Rational other = x[g.origin(d)] / Rational(gbs.delta(bar(d)));
        check_internal(xe[p] == other, "numbering: inconsistent edge value");
        scale = lcm_ll(scale, xe[p].den);
    }
    for (int v = 0; v < g.vertex_count(); ++v) scale = lcm_ll(scale, x[v].den);

    std::vector<long long> vl(g.vertex_count()), el(g.pair_count());
    for (int v = 0; v < g.vertex_count(); ++v) vl[v] = x[v].num * (scale / x[v].den);
    long long edge_gcd = 0;
    for (int p = 0; p < g.pair_count(); ++p) {
        el[p] = xe[p].num * (scale / xe[p].den);
        edge_gcd = std::gcd(edge_gcd, el[p]);
    }
    check_internal(edge_gcd >= 1, "numbering: bad edge gcd");
    // Centre normalization: vertex labels stay divisible because every
    // vertex label is a multiple of some incident edge label.
    for (auto& d : vl) {
        check_internal(d % edge_gcd == 0, "numbering: vertex label not divisible by edge gcd");
        d /= edge_gcd;
    }
    for (auto& d : el) d /= edge_gcd;
    return NumberedGraph(g, std::move(vl), std::move(el));
}

NumberedGraph centre_normalize(const NumberedGraph& g) {
    return numbering_from_gbs(gbs_from_numbering(g));
}

std::uint64_t graph_hash(const NumberedGraph& g) {
    std::string repr;
    std::vector<std::string> rows;
    for (int v = 0; v < g.vertex_count(); ++v)
        rows.push_back("v " + g.graph().vertex_name(v) + " " + std::to_string(g.vertex_label(v)));
    for (int p = 0; p < g.pair_count(); ++p) {
        std::string a = g.graph().vertex_name(g.graph().from(p));
        std::string b = g.graph().vertex_name(g.graph().to(p));
        if (a > b) std::swap(a, b);
        rows.push_back("e " + g.graph().pair_name(p) + " " + a + " " + b + " " +
                       std::to_string(g.edge_label(p)));
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& r : rows) {
        repr += r;
        repr += '\n';
    }
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : repr) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace gbslide
