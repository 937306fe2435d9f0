#include "gbslide/group_structure.hpp"

#include <algorithm>
#include <numeric>

namespace gbslide {

Word free_reduce(const Word& w) {
    Word out;
    for (auto [g, e] : w.syllables) {
        if (e == 0) continue;
        if (!out.syllables.empty() && out.syllables.back().first == g) {
            out.syllables.back().second += e;
            if (out.syllables.back().second == 0) out.syllables.pop_back();
        } else {
            out.syllables.emplace_back(g, e);
        }
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    while (r.syllables.size() >= 2 && r.syllables.front().first == r.syllables.back().first) {
        auto [g, e1] = r.syllables.front();
        auto e2 = r.syllables.back().second;
        r.syllables.erase(r.syllables.begin());
        r.syllables.pop_back();
        if (e1 + e2 != 0) r.syllables.insert(r.syllables.begin(), {g, e1 + e2});
    }
    return r;
}

Word inverse(const Word& w) {
    Word out;
    for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
        out.syllables.emplace_back(it->first, -it->second);
    return out;
}

Word concat(const std::vector<Word>& parts) {
    Word out;
    for (const Word& p : parts)
        out.syllables.insert(out.syllables.end(), p.syllables.begin(), p.syllables.end());
    return free_reduce(out);
}

int Presentation::generator_index(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

std::string word_str(const Presentation& p, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (auto [g, e] : w.syllables) {
        if (!out.empty()) out += " ";
        out += p.generators[g];
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

namespace {

// BFS spanning tree from vertex 0 (ids are kept sorted, so 0 is the smallest
// vertex id).
std::vector<bool> spanning_tree(const SerreGraph& g) {
    std::vector<bool> in_tree(g.pair_count(), false);
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (size_t i = 0; i < queue.size(); ++i) {
        for (const Dart& d : g.darts_at(queue[i])) {
            int w = g.tau(d);
            if (!seen[w]) {
                seen[w] = true;
                in_tree[d.pair] = true;
                queue.push_back(w);
            }
        }
    }
    return in_tree;
}

} // namespace

Presentation present(const NumberedGraph& g, Interp interp) {
    const SerreGraph& s = g.graph();
    Presentation p;
    std::vector<int> vgen(s.vertex_count());
    for (int v = 0; v < s.vertex_count(); ++v) {
        vgen[v] = static_cast<int>(p.generators.size());
        p.generators.push_back("t_" + s.vertex_name(v));
    }
    std::vector<bool> in_tree = spanning_tree(s);
    std::vector<int> egen(s.pair_count(), -1);
    for (int e = 0; e < s.pair_count(); ++e) {
        if (in_tree[e]) continue;
        egen[e] = static_cast<int>(p.generators.size());
        p.generators.push_back("g_" + s.pair_name(e));
    }

    auto delta = [&](Dart d) { return g.vertex_label(s.tau(d)) / g.edge_label(d.pair); };
    for (int e = 0; e < s.pair_count(); ++e) {
        Dart d{e, false};
        int dt = static_cast<int>(delta(d));
        int df = static_cast<int>(delta(bar(d)));
        if (in_tree[e]) {
            // t_o^{delta_bar} t_tau^{-delta}
            p.relators.push_back(free_reduce(
                Word{{{vgen[s.origin(d)], df}, {vgen[s.tau(d)], -dt}}}));
        } else {
            // g t_tau^{delta} g^-1 t_o^{-delta_bar}
            p.relators.push_back(free_reduce(Word{{{egen[e], 1},
                                                   {vgen[s.tau(d)], dt},
                                                   {egen[e], -1},
                                                   {vgen[s.origin(d)], -df}}}));
        }
    }
    if (interp == Interp::finite_quotient)
        for (int v = 0; v < s.vertex_count(); ++v)
            p.relators.push_back(Word{{{vgen[v], static_cast<int>(g.vertex_label(v))}}});
    return p;
}

Epimorphism structure_epimorphism(const NumberedGraph& g) {
    Epimorphism epi;
    for (int v = 0; v < g.vertex_count(); ++v) epi.modulus = lcm_ll(epi.modulus, g.vertex_label(v));

    Presentation p = present(g, Interp::finite_quotient);
    std::vector<long long> image(p.generators.size(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int idx = p.generator_index("t_" + g.graph().vertex_name(v));
        check_internal(idx >= 0, "epimorphism: missing vertex generator");
        image[idx] = epi.modulus / g.vertex_label(v);
    }
    // Executable well-definedness: every relator maps to 0 mod M.
    for (const Word& r : p.relators) {
        long long total = 0;
        for (auto [gen, exp] : r.syllables) total += image[gen] * exp;
        check_internal(total % epi.modulus == 0,
                       "epimorphism: relator image nonzero, map ill-defined");
    }
    for (size_t i = 0; i < p.generators.size(); ++i)
        epi.images.emplace_back(p.generators[i], image[i] % epi.modulus);
    return epi;
}

Rational rational_euler_char(const NumberedGraph& g) {
    Rational chi(0);
    for (int v = 0; v < g.vertex_count(); ++v) chi = chi + Rational(1, g.vertex_label(v));
    for (int p = 0; p < g.pair_count(); ++p) chi = chi - Rational(1, g.edge_label(p));
    return chi;
}

namespace {

Rational negative_euler_or_throw(const NumberedGraph& g) {
    Rational chi = rational_euler_char(g);
    if (!(chi < Rational(0)))
        throw DegenerateGroupError(
            "Euler characteristic " + chi.str() +
            " is not negative; the group is virtually abelian and excluded");
    return chi;
}

} // namespace

long long holonomy_order(const NumberedGraph& g, long long fiber_rank_n) {
    Rational chi = negative_euler_or_throw(g);
    Rational m = Rational(1 - fiber_rank_n) / chi;
    check_input(m.is_integer() && m.num >= 1,
                "holonomy order (1-N)/chi = " + m.str() + " is not a positive integer; "
                "no such fibration");
    return m.num;
}

long long fiber_rank(const NumberedGraph& g, long long holonomy_m) {
    check_input(holonomy_m >= 1, "fiber rank: holonomy order must be >= 1");
    Rational chi = negative_euler_or_throw(g);
    Rational n = Rational(1) - Rational(holonomy_m) * chi;
    check_input(n.is_integer() && n.num >= 2,
                "fiber rank 1 - m*chi = " + n.str() + " is not an integer >= 2; "
                "no such fibration");
    return n.num;
}

std::optional<long long> recognize_direct_product(const NumberedGraph& g) {
    if (g.pair_count() == 0)
        throw DegenerateGroupError("recognize: edgeless graph presents Z");
    auto [r, log] = reduce(g);
    (void)log;
    if (r.pair_count() == 0)
        throw DegenerateGroupError("recognize: graph reduces to a point, group is Z");
    NumberedGraph h = centre_normalize(r);
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.vertex_label(v) != 1) return std::nullopt;
    for (int p = 0; p < h.pair_count(); ++p)
        if (h.edge_label(p) != 1) return std::nullopt;
    return betti(h.graph());
}

bool centreless_candidate(const NumberedGraph& g) {
    if (g.pair_count() == 0)
        throw DegenerateGroupError("centreless check: edgeless graph presents Z");
    long long gcd_all = 0;
    for (int p = 0; p < g.pair_count(); ++p) gcd_all = std::gcd(gcd_all, g.edge_label(p));
    return gcd_all == 1;
}

FscReport fsc_report(const NumberedGraph& g) {
    FscReport report;
    report.poset = associated_poset(g);
    int min_idx = report.poset.minimum();
    check_internal(min_idx >= 0 && report.poset.elements[min_idx].level == 1,
                   "fsc: poset of a connected graph must have a level-1 minimum");
    check_internal(report.poset.elements[min_idx].tag == betti(g.graph()),
                   "fsc: trivial class tag must be the graph's first Betti number");
    for (int i = 0; i < report.poset.size(); ++i) {
        const PosetElement& el = report.poset.elements[i];
        FscClass cls;
        cls.element_id = el.id();
        cls.subgroup_order = el.level;
        cls.centraliser_betti = el.tag;
        cls.trivial_class = (i == min_idx);
        report.classes.push_back(cls);
    }
    return report;
}

Presentation higman_twist(const Presentation& p, int relator_index, const std::string& letter) {
    check_input(p.generators.size() >= 2, "higman twist: need at least two generators");
    check_input(relator_index >= 0 && relator_index < static_cast<int>(p.relators.size()),
                "higman twist: relator index out of range");
    int t = p.generator_index(letter);
    check_input(t >= 0, "higman twist: unknown generator '" + letter + "'");

    Word r = cyclic_reduce(p.relators[relator_index]);
    check_input(!r.empty(), "higman twist: relator is trivial");
    bool power_of_t = std::all_of(r.syllables.begin(), r.syllables.end(),
                                  [&](auto& s) { return s.first == t; });
    check_input(!power_of_t, "higman twist: relator is a power of '" + letter + "'");

    Word conj = concat({Word{{{t, -1}}}, r, Word{{{t, 1}}}}); // t^-1 r t
    Word twisted = concat({inverse(conj), r, conj, inverse(r), inverse(r)});

    Presentation out = p;
    out.relators[relator_index] = twisted;
    return out;
}

} // namespace gbslide
